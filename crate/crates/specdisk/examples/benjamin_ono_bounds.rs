//! The Benjamin-Ono borderline: closed-form Fourier coefficients and ℓ¹
//! norm of the rational wave, and the disks that never separate.
//!
//!     cargo run --release --example benjamin_ono_bounds

use specdisk::potentials::{self, WaveFamilyParams};
use specdisk::{disks, Result};

fn main() -> Result<()> {
    let (c, period) = (2.0, 2.0 * std::f64::consts::PI * 1.1);
    println!("BO rational wave, c = {c}, T = {period:.4}");

    println!("\nclosed-form coefficients (geometric decay):");
    for k in 0..6i64 {
        println!("  Q_(±{k}) = {:.8}", potentials::bo_fourier_coefficient(c, period, k)?);
    }
    let closed = potentials::bo_l1_norm(c, period)?;
    println!("\nl1 norm (closed form)  = {closed:.10}");
    let mut series = potentials::bo_fourier_coefficient(c, period, 0)?;
    for k in 1..200 {
        series += 2.0 * potentials::bo_fourier_coefficient(c, period, k)?;
    }
    println!("l1 norm (series sum)   = {series:.10}");

    // The spacing-vs-radius inequality fails for every admissible x.
    println!("\nx/(1 - sqrt(1-x^2)) for x = 2pi/(cT), always >= 1:");
    for &(cc, tt) in &[(2.0, period), (5.0, 3.0), (10.0, 2.0)] {
        let x = 2.0 * std::f64::consts::PI / (cc * tt);
        println!("  (c={cc}, T={tt:.3}): {:.4}", x / (1.0 - (1.0 - x * x).sqrt()));
    }

    let params = WaveFamilyParams::BORational { c, period };
    let problem = potentials::build_problem(&params, params.default_truncation())?;
    let overlapping = (1..=100).filter(|&k| {
        !disks::adjacent_disjoint(&problem, k, 0.0).unwrap()
    }).count();
    println!("\nadjacent disk pairs overlapping for k in [1, 100]: {overlapping}/100");
    println!("tail bound: {:?}", disks::tail_index_bound(&problem).err().map(|e| e.to_string()));
    Ok(())
}
