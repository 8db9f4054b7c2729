//! Render the paper-style figure for one Floquet exponent: Gershgorin
//! disks in blue, eigenvalues in red.
//!
//!     cargo run --release --example figure_svg

use specdisk::potentials::{build_problem, WaveFamilyParams};
use specdisk::svg::{render_figure, FigureOptions};
use specdisk::{disks, hill, Result};

fn main() -> Result<()> {
    let problem = build_problem(
        &WaveFamilyParams::MKdVCnoidal {
            amplitude: 1.0,
            m: 0.5,
        },
        32,
    )?;
    let mu = 0.0;
    let window = 6;

    let family = disks::window_disks(&problem, mu, window)?;
    let spectrum = hill::solve_trusted(&problem, mu, 64)?;
    let top = family
        .iter()
        .map(|d| d.center.im.abs() + d.radius)
        .fold(1.0, f64::max);
    let shown: Vec<_> = spectrum
        .trusted()
        .filter(|l| l.im.abs() <= 1.15 * top)
        .collect();

    let svg = render_figure(
        &family,
        &shown,
        &format!("mKdV cnoidal wave, mu = {mu}"),
        &FigureOptions::default(),
    );
    let dir = std::env::temp_dir().join("specdisk-examples");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("mkdv_mu0.svg");
    std::fs::write(&path, svg)?;
    println!(
        "figure with {} disks and {} eigenvalues written to {}",
        family.len(),
        shown.len(),
        path.display()
    );
    Ok(())
}
