//! Run the full verification battery (symmetry, containment, counting,
//! homotopy, imaginary certificate) for the mKdV wave over a small mu
//! grid and print the machine-readable report.
//!
//!     cargo run --release --example verify_report

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::{export, verify, Result};

fn main() -> Result<()> {
    let problem = build_problem(
        &WaveFamilyParams::MKdVCnoidal {
            amplitude: 1.0,
            m: 0.5,
        },
        32,
    )?;

    let mut reports = Vec::new();
    for mu in [0.0, 0.2, 0.4] {
        let report = verify::verify_all(&problem, mu, 48, 8, 20)?;
        for check in &report.checks {
            println!(
                "mu = {:<4} | {:<12} | {} | margin {:+.3e}",
                mu,
                check.name,
                if check.passed { "PASS" } else { "FAIL" },
                check.margin
            );
        }
        reports.push(report);
    }

    println!("\nJSON report:\n{}", export::verification_json(&reports));
    Ok(())
}
