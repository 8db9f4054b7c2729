//! Sweep the Floquet exponent for the mKdV wave and locate the collision
//! at mu_c where the off-axis eigenvalue count jumps from two to four.
//!
//!     cargo run --release --example bifurcation_sweep

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::{hill, verify, Result};

fn main() -> Result<()> {
    let problem = build_problem(
        &WaveFamilyParams::MKdVCnoidal {
            amplitude: 1.0,
            m: 0.5,
        },
        32,
    )?;
    let n = 64;

    let grid: Vec<f64> = (1..=25).map(|i| 0.5 * i as f64 / 25.0).collect();
    println!("off-axis eigenvalue counts over the mu grid:");
    for spectrum in hill::collect_sweep(hill::sweep(&problem, &grid, n))? {
        let count = verify::count_off_axis(&spectrum, 1e-6);
        println!("  mu = {:<5.3} -> {count}", spectrum.mu);
    }

    let mut lo = 0.1;
    let mut hi = 0.45;
    for _ in 0..14 {
        let mid = 0.5 * (lo + hi);
        let spectrum = hill::solve(&problem, mid, n)?;
        if verify::count_off_axis(&spectrum, 1e-6) >= 4 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    println!("\nbifurcation located at mu_c = {:.4}", 0.5 * (lo + hi));
    Ok(())
}
