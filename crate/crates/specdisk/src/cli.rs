//! Command orchestration behind the `specdisk` binary: runs an analysis
//! described by a [`RunConfig`] and writes CSV/JSON/SVG artifacts.

use std::path::PathBuf;

use rayon::prelude::*;

use crate::config::{OutputFormat, RunConfig};
use crate::dispersion::SpectralProblem;
use crate::error::{Error, Result};
use crate::export;
use crate::svg::{self, FigureOptions};
use crate::{disks, hill, verify};

/// The five analyses exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Action {
    Potential,
    Disks,
    Spectrum,
    Verify,
    Figure,
}

/// Command-line overrides applied on top of the configuration file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    /// Replaces the whole μ grid by a single value.
    pub mu: Option<f64>,
    pub n: Option<usize>,
    pub out: Option<PathBuf>,
}

/// Runs one action end to end. Returns the process exit code: 0 for
/// success, 1 when a verification check fails. Configuration and module
/// errors surface as `Err` (exit code 2 at the binary boundary).
pub fn run(action: Action, mut config: RunConfig, overrides: &Overrides) -> Result<i32> {
    if let Some(mu) = overrides.mu {
        config.mu_grid = crate::config::MuGrid::List(vec![mu]);
    }
    if let Some(n) = overrides.n {
        config.n = n;
    }
    if let Some(out) = &overrides.out {
        config.output_dir = out.clone();
    }
    config.validate()?;

    let problem = config.build_problem()?;
    std::fs::create_dir_all(&config.output_dir)?;

    match action {
        Action::Potential => run_potential(&config, &problem),
        Action::Disks => run_disks(&config, &problem),
        Action::Spectrum => run_spectrum(&config, &problem),
        Action::Verify => run_verify(&config, &problem),
        Action::Figure => run_figure(&config, &problem),
    }
}

fn wants(config: &RunConfig, format: OutputFormat) -> bool {
    config.formats.contains(&format)
}

fn write_artifact(config: &RunConfig, name: &str, contents: &str) -> Result<()> {
    let path = config.output_dir.join(name);
    std::fs::write(&path, contents)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn run_potential(config: &RunConfig, problem: &SpectralProblem) -> Result<i32> {
    let potential = problem.potential();
    println!(
        "potential: period {} | mean {} | l1 (no mean) {} | l1 (with mean) {} | c {}",
        potential.period(),
        potential.mean().re,
        potential.l1_no_mean(),
        potential.l1_with_mean(),
        problem.wave_speed()
    );
    if wants(config, OutputFormat::Csv) {
        write_artifact(config, "potential.csv", &export::potential_csv(potential))?;
    }
    if wants(config, OutputFormat::Json) {
        write_artifact(config, "potential.json", &export::potential_json(potential))?;
    }
    Ok(0)
}

fn run_disks(config: &RunConfig, problem: &SpectralProblem) -> Result<i32> {
    let window = config.window(problem);
    let tail = match disks::tail_index_bound(problem) {
        Ok(bound) => {
            println!(
                "tail bound: fractional {} | disjoint beyond k = {}",
                bound.fractional, bound.k_star
            );
            Some(bound)
        }
        Err(Error::NotApplicable(reason)) => {
            println!("tail bound: not applicable ({reason})");
            None
        }
        Err(e) => return Err(e),
    };

    let mut all_disks = Vec::new();
    let mut reports = Vec::new();
    for mu in config.mu_values() {
        all_disks.extend(disks::window_disks(problem, mu, window)?);
        let report = disks::components(problem, mu, window)?;
        println!(
            "mu = {mu}: largest component {} | unstable bound {}",
            report.largest(),
            report.unstable_bound
        );
        reports.push(report);
    }
    if wants(config, OutputFormat::Csv) {
        write_artifact(config, "disks.csv", &export::disks_csv(&all_disks))?;
    }
    if wants(config, OutputFormat::Json) {
        write_artifact(
            config,
            "disks.json",
            &export::components_json(tail.as_ref(), &reports),
        )?;
    }
    Ok(0)
}

fn run_spectrum(config: &RunConfig, problem: &SpectralProblem) -> Result<i32> {
    let spectra = hill::collect_sweep(hill::sweep_trusted(problem, &config.mu_values(), config.n))?;
    for s in &spectra {
        println!(
            "mu = {}: {} eigenvalues | {} off-axis | trusted band {}",
            s.mu,
            s.eigenvalues.len(),
            verify::count_off_axis(s, 1e-6),
            s.trusted_band
        );
    }
    if wants(config, OutputFormat::Csv) {
        write_artifact(config, "spectrum.csv", &export::spectra_csv(&spectra))?;
    }
    if wants(config, OutputFormat::Json) {
        write_artifact(config, "spectrum.json", &export::spectra_json(&spectra))?;
    }
    Ok(0)
}

fn run_verify(config: &RunConfig, problem: &SpectralProblem) -> Result<i32> {
    let window = config.window(problem);
    let reports: Vec<_> = config
        .mu_values()
        .par_iter()
        .map(|&mu| verify::verify_all(problem, mu, config.n, window, config.homotopy_steps))
        .collect::<Result<_>>()?;
    for report in &reports {
        for check in &report.checks {
            println!(
                "mu = {} | {:<12} | {} | margin {:+.3e}",
                report.mu,
                check.name,
                if check.passed { "PASS" } else { "FAIL" },
                check.margin
            );
        }
    }
    if wants(config, OutputFormat::Json) {
        write_artifact(config, "report.json", &export::verification_json(&reports))?;
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(if passed { 0 } else { 1 })
}

fn run_figure(config: &RunConfig, problem: &SpectralProblem) -> Result<i32> {
    let window = config.window(problem);
    let options = FigureOptions::default();
    for (index, mu) in config.mu_values().into_iter().enumerate() {
        let family_disks = disks::window_disks(problem, mu, window)?;
        let spectrum = hill::solve_trusted(problem, mu, config.n)?;
        // Keep the view on the disk window; drop eigenvalues far outside.
        let top = family_disks
            .iter()
            .map(|d| d.center.im.abs() + d.radius)
            .fold(1.0, f64::max);
        let shown: Vec<_> = spectrum
            .trusted()
            .filter(|l| l.im.abs() <= 1.15 * top)
            .collect();
        let figure = svg::render_figure(
            &family_disks,
            &shown,
            &format!("specdisk figure: mu = {mu}, window {window}, N = {}", config.n),
            &options,
        );
        write_artifact(config, &format!("figure_{index:03}.svg", index = index), &figure)?;
    }
    Ok(0)
}
