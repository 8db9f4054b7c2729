//! Gershgorin disk geometry for the mKdV example: tail bounds,
//! adjacent-disjointness threshold, and the intersection components as
//! the Floquet exponent varies.
//!
//!     cargo run --release --example disk_components

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::{disks, Result};

fn main() -> Result<()> {
    let problem = build_problem(
        &WaveFamilyParams::MKdVCnoidal {
            amplitude: 1.0,
            m: 0.5,
        },
        32,
    )?;

    let tail = disks::tail_index_bound(&problem)?;
    println!("tail bound: fractional k* = {:.4}", tail.fractional);
    println!("disks with |k| >= {} are disjoint from all others", tail.k_star);
    let threshold = disks::adjacent_disjoint_threshold(&problem)?;
    println!("adjacent disks separate for |k + mu| > {threshold:.4}");
    println!();

    for mu in [0.0, 0.1, 0.2, 0.3, 0.4, 0.5] {
        let report = disks::components(&problem, mu, 8)?;
        let sizes: Vec<usize> = report
            .components
            .iter()
            .filter(|c| c.size > 1)
            .map(|c| c.size)
            .collect();
        println!(
            "mu = {mu:.1}: largest component {} | non-singleton sizes {:?} | unstable bound {}",
            report.largest(),
            sizes,
            report.unstable_bound
        );
    }
    Ok(())
}
