//! Recover the Kawahara scaling sigma by minimizing the stationary
//! residual, then inspect the seven-disk component and the eigenvalue
//! pairs near ±0.28i and ±0.022i.
//!
//!     cargo run --release --example kawahara_residual_fit

use specdisk::potentials::{self, WaveFamilyParams};
use specdisk::{disks, hill, Result};

fn main() -> Result<()> {
    let (alpha, m) = (2.0, 0.6185);
    let (a1, a2, a3) = (0.659, 2.306, -2.51);
    let (sigma, residual) = potentials::fit_kawahara_sigma(alpha, m, a1, a2, a3, 512)?;
    println!("fitted sigma = {sigma:.6} (stationary residual {residual:.3e})");
    println!("admissibility |alpha/sigma^2| = {:.1} < 52", alpha / (sigma * sigma));

    let params = WaveFamilyParams::KawaharaCnQuartic {
        alpha,
        sigma,
        m,
        a1,
        a2,
        a3,
    };
    let problem = potentials::build_problem(&params, 32)?;
    let tail = disks::tail_index_bound(&problem)?;
    let report = disks::components(&problem, 0.0, tail.k_star.unsigned_abs() as usize + 2)?;
    println!(
        "\nmu = 0: largest disk component has {} members (indices {:?})",
        report.largest(),
        report
            .components
            .iter()
            .max_by_key(|c| c.size)
            .map(|c| c.indices.clone())
            .unwrap_or_default()
    );

    let spectrum = hill::solve(&problem, 0.0, 96)?;
    let mut low: Vec<_> = spectrum
        .eigenvalues
        .iter()
        .filter(|l| l.norm() < 0.5)
        .collect();
    low.sort_by(|a, b| a.norm().total_cmp(&b.norm()));
    println!("\neigenvalues inside the component:");
    for lambda in low {
        println!("  {:+.4e} {:+.4e} i", lambda.re, lambda.im);
    }
    Ok(())
}
