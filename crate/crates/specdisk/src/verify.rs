//! Numerical verification of the disk theorems against computed spectra:
//! containment in the disk union, per-component eigenvalue counts via the
//! τ-homotopy, Hamiltonian symmetry, and the purely-imaginary certificate
//! for isolated disks.
//!
//! Every check reports the numeric margin by which it passed or failed,
//! never a bare boolean; negative-control tests corrupt inputs on purpose
//! to prove the checks can fail.

use num_complex::Complex64;
use serde::Serialize;

use crate::dispersion::{EquationFamily, SpectralProblem};
use crate::disks::{self, GershgorinDisk};
use crate::error::{Error, Result};
use crate::hill::{self, SpectrumResult};

/// Relative tolerance for membership in a disk union.
const CONTAINMENT_TOL: f64 = 1e-8;
/// Relative `|Re λ|` threshold for "purely imaginary".
const IMAGINARY_TOL: f64 = 1e-8;
/// Relative tolerance of the Hamiltonian symmetry match.
const SYMMETRY_TOL: f64 = 1e-6;
/// Eigenvalues this close to the origin are treated as the zero
/// eigenvalue, which the containment theorem does not speak about.
const ZERO_CUTOFF: f64 = 1e-8;

/// Outcome of one verification check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Signed worst-case margin; nonpositive margins pass for geometric
    /// checks, zero deviation passes for counting checks.
    pub margin: f64,
    pub details: String,
}

/// All checks for one Floquet exponent.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub mu: f64,
    pub truncation: usize,
    pub window: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Signed distance from a point to a disk union: negative inside.
fn distance_to_union(lambda: Complex64, disks: &[GershgorinDisk]) -> f64 {
    disks
        .iter()
        .map(|d| (lambda - d.center).norm() - d.radius)
        .fold(f64::INFINITY, f64::min)
}

/// Number of trusted eigenvalues with `|Re λ| > rel_tol (1 + |λ|)`.
pub fn count_off_axis(spectrum: &SpectrumResult, rel_tol: f64) -> usize {
    spectrum
        .trusted()
        .filter(|l| l.re.abs() > rel_tol * (1.0 + l.norm()))
        .count()
}

/// Hamiltonian symmetry: the trusted eigenvalue multiset must be
/// invariant under `λ ↦ -conj(λ)`. Runs before the containment and
/// counting checks, which quote it as a dependency.
pub fn check_symmetry(spectrum: &SpectrumResult) -> Check {
    let trusted: Vec<Complex64> = spectrum.trusted().collect();
    let max_norm = trusted.iter().map(|l| l.norm()).fold(0.0, f64::max);
    let tol = SYMMETRY_TOL * (1.0 + max_norm);
    let mut worst = 0.0_f64;
    for lambda in &trusted {
        let reflected = -lambda.conj();
        let nearest = trusted
            .iter()
            .map(|o| (reflected - o).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(nearest);
    }
    Check {
        name: "symmetry".into(),
        passed: worst <= tol,
        margin: worst - tol,
        details: format!(
            "max distance from the reflected multiset {worst:.3e}, tolerance {tol:.3e}, \
             {} trusted eigenvalues",
            trusted.len()
        ),
    }
}

/// Containment: every trusted nonzero eigenvalue lies in the disk union,
/// within `1e-8 (1+|λ|)`. The union is sampled out to the matrix
/// truncation so no eigenvalue misses its own disk.
pub fn check_containment(
    spectrum: &SpectrumResult,
    problem: &SpectralProblem,
    window_n: usize,
) -> Result<Check> {
    let reach = window_n.max(spectrum.truncation + 2);
    let disks = disks::window_disks(problem, spectrum.mu, reach)?;
    let mut worst = f64::NEG_INFINITY;
    let mut worst_lambda = Complex64::new(0.0, 0.0);
    let mut checked = 0usize;
    for lambda in spectrum.trusted() {
        if lambda.norm() <= ZERO_CUTOFF {
            continue;
        }
        checked += 1;
        let dist = distance_to_union(lambda, &disks);
        let excess = dist - CONTAINMENT_TOL * (1.0 + lambda.norm());
        if excess > worst {
            worst = excess;
            worst_lambda = lambda;
        }
    }
    if checked == 0 {
        worst = 0.0;
    }
    Ok(Check {
        name: "containment".into(),
        passed: worst <= 0.0,
        margin: worst,
        details: format!(
            "worst outside-distance margin {worst:.3e} at {worst_lambda}, \
             {checked} nonzero trusted eigenvalues (depends on: symmetry)"
        ),
    })
}

/// Assigns each trusted eigenvalue to its nearest component; returns the
/// per-component counts and how many assignments were ambiguous (within
/// tolerance of a second component as well).
fn component_counts(
    spectrum: &SpectrumResult,
    disk_cache: &[Vec<GershgorinDisk>],
) -> (Vec<usize>, usize) {
    let mut counts = vec![0usize; disk_cache.len()];
    let mut ambiguous = 0usize;
    for lambda in spectrum.trusted() {
        let tol = CONTAINMENT_TOL * (1.0 + lambda.norm());
        let distances: Vec<f64> = disk_cache
            .iter()
            .map(|disks_of| distance_to_union(lambda, disks_of))
            .collect();
        let Some((best_idx, best)) = distances
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
        else {
            continue;
        };
        if best <= tol {
            counts[best_idx] += 1;
            let second = distances
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != best_idx)
                .map(|(_, &d)| d)
                .fold(f64::INFINITY, f64::min);
            if second <= tol {
                ambiguous += 1;
            }
        }
    }
    (counts, ambiguous)
}

fn disks_per_component(
    problem: &SpectralProblem,
    report: &disks::ComponentReport,
) -> Result<Vec<Vec<GershgorinDisk>>> {
    report
        .components
        .iter()
        .map(|c| {
            c.indices
                .iter()
                .map(|&k| disks::disk(problem, k, report.mu))
                .collect()
        })
        .collect()
}

/// A component is testable only when it sits strictly inside the window:
/// one touching the window edge may continue beyond it (Benjamin–Ono
/// disks never separate, so its single infinite component always does),
/// and its eigenvalue count is not a statement the truncated window can
/// check.
fn is_window_open(component: &disks::Component, window_n: usize) -> bool {
    component
        .indices
        .iter()
        .any(|k| k.unsigned_abs() as usize >= window_n)
}

/// Counting: each connected component of `n` intersecting disks must hold
/// exactly `n` trusted eigenvalues (multiplicity as list entries).
/// Components that touch the window boundary are skipped and reported.
pub fn check_counts(
    spectrum: &SpectrumResult,
    problem: &SpectralProblem,
    window_n: usize,
) -> Result<Check> {
    let report = disks::components(problem, spectrum.mu, window_n)?;
    let cache = disks_per_component(problem, &report)?;
    let (counts, ambiguous) = component_counts(spectrum, &cache);
    let mut worst = 0i64;
    let mut skipped = 0usize;
    let mut tested = 0usize;
    let mut mismatches = Vec::new();
    for (component, &count) in report.components.iter().zip(&counts) {
        if is_window_open(component, window_n) {
            skipped += 1;
            continue;
        }
        tested += 1;
        let deviation = count as i64 - component.size as i64;
        if deviation != 0 {
            mismatches.push(format!(
                "component {:?} expected {} found {}",
                component.indices, component.size, count
            ));
        }
        worst = worst.max(deviation.abs());
    }
    let mut notes = String::new();
    if ambiguous > 0 {
        notes.push_str(&format!("; {ambiguous} ambiguous assignments flagged"));
    }
    if skipped > 0 {
        notes.push_str(&format!("; {skipped} window-open components skipped"));
    }
    Ok(Check {
        name: "counts".into(),
        passed: worst == 0,
        margin: worst as f64,
        details: if mismatches.is_empty() {
            format!("all {tested} interior components hold exactly their disk count{notes} (depends on: symmetry)")
        } else {
            format!("{}{notes} (depends on: symmetry)", mismatches.join("; "))
        },
    })
}

/// τ-homotopy: scale the potential by `τ = j/steps` and verify that every
/// windowed component keeps a constant eigenvalue count, with one
/// eigenvalue per disk (at the centers) when `τ = 0`.
pub fn homotopy_trace(
    problem: &SpectralProblem,
    mu: f64,
    truncation: usize,
    window_n: usize,
    steps: usize,
) -> Result<Check> {
    if steps < 10 {
        return Err(Error::Domain(format!(
            "homotopy needs at least 10 steps, got {steps}"
        )));
    }
    let report = disks::components(problem, mu, window_n)?;
    let cache = disks_per_component(problem, &report)?;
    let testable: Vec<bool> = report
        .components
        .iter()
        .map(|c| !is_window_open(c, window_n))
        .collect();
    let expected: Vec<usize> = report.components.iter().map(|c| c.size).collect();

    let mut worst = 0i64;
    let mut first_bad_tau = None;
    let mut center_error = 0.0_f64;
    for j in 0..=steps {
        let tau = j as f64 / steps as f64;
        let matrix = hill::assemble_homotopy(problem, mu, truncation, tau)?;
        let spectrum = hill::eigenvalues(&matrix)?;
        if j == 0 {
            // Unperturbed eigenvalues sit exactly at the disk centers.
            let mut centers: Vec<Complex64> = (-(truncation as i64)..=truncation as i64)
                .map(|k| problem.disk_center(k as f64 + mu))
                .collect();
            centers.sort_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)));
            for (got, want) in spectrum.eigenvalues.iter().zip(&centers) {
                center_error = center_error.max((got - want).norm() / (1.0 + want.norm()));
            }
        }
        let (counts, _) = component_counts(&spectrum, &cache);
        for ((&count, &want), &ok) in counts.iter().zip(&expected).zip(&testable) {
            if !ok {
                continue;
            }
            let deviation = (count as i64 - want as i64).abs();
            if deviation > 0 && first_bad_tau.is_none() {
                first_bad_tau = Some(tau);
            }
            worst = worst.max(deviation);
        }
    }
    let passed = worst == 0 && center_error <= 1e-10;
    Ok(Check {
        name: "homotopy".into(),
        passed,
        margin: worst as f64,
        details: match first_bad_tau {
            Some(tau) => format!("component count first deviates at tau = {tau}"),
            None => format!(
                "counts constant over {} tau steps; tau=0 center error {center_error:.3e}",
                steps + 1
            ),
        },
    })
}

/// Purely-imaginary certificate: trusted eigenvalues assigned to
/// singleton disks must satisfy `|Re λ| ≤ 1e-8 (1+|λ|)`, and the number
/// of off-axis eigenvalues must respect both the component bound and the
/// `2k*` corollary bound.
pub fn certify_imaginary(
    spectrum: &SpectrumResult,
    problem: &SpectralProblem,
    window_n: usize,
) -> Result<Check> {
    let tail = disks::tail_index_bound(problem)?;
    let report = disks::components(problem, spectrum.mu, window_n)?;
    let cache = disks_per_component(problem, &report)?;

    let mut worst = f64::NEG_INFINITY;
    for lambda in spectrum.trusted() {
        let tol = CONTAINMENT_TOL * (1.0 + lambda.norm());
        // Nearest singleton component, if the eigenvalue belongs to one.
        for (component, disks_of) in report.components.iter().zip(&cache) {
            if component.size != 1 {
                continue;
            }
            if distance_to_union(lambda, disks_of) <= tol {
                worst = worst.max(lambda.re.abs() - IMAGINARY_TOL * (1.0 + lambda.norm()));
            }
        }
    }
    if worst == f64::NEG_INFINITY {
        worst = 0.0;
    }

    let off_axis = count_off_axis(spectrum, IMAGINARY_TOL);
    let corollary_cap = (2 * tail.k_star) as usize;
    let counts_ok = off_axis <= report.unstable_bound && off_axis <= corollary_cap;
    Ok(Check {
        name: "imaginary".into(),
        passed: worst <= 0.0 && counts_ok,
        margin: worst,
        details: format!(
            "singleton-disk real-part margin {worst:.3e}; {off_axis} off-axis eigenvalues \
             vs component bound {} and corollary bound {corollary_cap}",
            report.unstable_bound
        ),
    })
}

/// Runs the full check battery for one μ. Symmetry is evaluated first;
/// the remaining checks quote it as a dependency. The certificate is
/// skipped for Benjamin–Ono, which has no tail bound.
pub fn verify_all(
    problem: &SpectralProblem,
    mu: f64,
    truncation: usize,
    window_n: usize,
    homotopy_steps: usize,
) -> Result<VerificationReport> {
    let spectrum = hill::solve_trusted(problem, mu, truncation)?;
    let mut checks = vec![check_symmetry(&spectrum)];
    checks.push(check_containment(&spectrum, problem, window_n)?);
    checks.push(check_counts(&spectrum, problem, window_n)?);
    if homotopy_steps > 0 {
        checks.push(homotopy_trace(
            problem,
            mu,
            truncation,
            window_n,
            homotopy_steps,
        )?);
    }
    if problem.family() != EquationFamily::BenjaminOno {
        checks.push(certify_imaginary(&spectrum, problem, window_n)?);
    }
    Ok(VerificationReport {
        mu,
        truncation,
        window: window_n,
        checks,
    })
}
