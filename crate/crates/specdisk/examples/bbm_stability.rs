//! The BBM cnoidal wave with m = 3/4: equally spaced disks with decaying
//! radii, the spacing threshold near 8.48, disjointness beyond |k| = 9,
//! and a spectrum that stays on the imaginary axis.
//!
//!     cargo run --release --example bbm_stability

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::{disks, hill, verify, Result};

fn main() -> Result<()> {
    let problem = build_problem(&WaveFamilyParams::BBMCnoidal { m: 0.75 }, 32)?;
    let potential = problem.potential();
    println!("period T        = {:.6}", potential.period());
    println!("l1 with mean    = {:.9}", potential.l1_with_mean());
    println!("all disjoint?     {}", disks::all_disjoint_sufficient(&problem)?);
    let tail = disks::tail_index_bound(&problem)?;
    println!(
        "spacing threshold = {:.4}; disks disjoint for |k| > {}",
        tail.fractional,
        tail.k_star - 1
    );

    println!("\noff-axis eigenvalue counts at N = 64:");
    let grid: Vec<f64> = (1..=11).map(|i| -0.5 + i as f64 / 11.0).collect();
    for spectrum in hill::collect_sweep(hill::sweep(&problem, &grid, 64))? {
        println!(
            "  mu = {:>6.3} -> {}",
            spectrum.mu,
            verify::count_off_axis(&spectrum, 1e-6)
        );
    }
    Ok(())
}
