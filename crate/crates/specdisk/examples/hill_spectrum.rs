//! Solve the truncated eigenvalue problem for the mKdV wave at mu = 0 and
//! show the eigenvalues trapped by the five-disk component: a triple
//! eigenvalue at the origin and the ±2.44i pair.
//!
//!     cargo run --release --example hill_spectrum

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::{hill, Result};

fn main() -> Result<()> {
    let problem = build_problem(
        &WaveFamilyParams::MKdVCnoidal {
            amplitude: 1.0,
            m: 0.5,
        },
        32,
    )?;

    let spectrum = hill::solve_trusted(&problem, 0.0, 64)?;
    println!(
        "N = {}, {} eigenvalues, trusted band = {}",
        spectrum.truncation,
        spectrum.eigenvalues.len(),
        spectrum.trusted_band
    );

    let mut by_magnitude = spectrum.eigenvalues.clone();
    by_magnitude.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    println!("\nlowest eigenvalues by magnitude:");
    for lambda in by_magnitude.iter().take(9) {
        println!("  {:+.6e} {:+.6e} i", lambda.re, lambda.im);
    }
    Ok(())
}
