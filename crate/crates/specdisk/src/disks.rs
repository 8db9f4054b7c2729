//! Gershgorin disks, disjointness tests, tail bounds, and intersection
//! components.
//!
//! For each Floquet exponent μ the `k`-th disk is centered at the
//! unperturbed eigenvalue `i(ω(κ) + cκ)` (plus `iκW(κ)Q̂₀` when the mean
//! sits in the center) with radius `|κ|W(κ)‖Q̂‖₁`, `κ = 2π(k+μ)/T`. Every
//! nonzero eigenvalue of the quasi-periodic problem lies in the union of
//! the disks, and a connected component of `n` intersecting disks traps
//! exactly `n` eigenvalues, so the geometry of the disks alone bounds how
//! many eigenvalues can leave the imaginary axis.
//!
//! All geometric quantities depend on the index only through the
//! continuous variable `y = k + μ`, which the tail-bound machinery
//! exploits.

use num_complex::Complex64;
use serde::Serialize;

use crate::dispersion::{EquationFamily, SpectralProblem};
use crate::error::{Error, Result};
use crate::hill::check_mu;

/// One Gershgorin disk `D_k(μ)`.
#[derive(Clone, Copy, Debug)]
pub struct GershgorinDisk {
    pub k: i64,
    pub mu: f64,
    /// Purely imaginary for every family.
    pub center: Complex64,
    pub radius: f64,
}

/// Builds `D_k(μ)`.
pub fn disk(problem: &SpectralProblem, k: i64, mu: f64) -> Result<GershgorinDisk> {
    check_mu(mu)?;
    let y = k as f64 + mu;
    Ok(GershgorinDisk {
        k,
        mu,
        center: problem.disk_center(y),
        radius: problem.disk_radius(y),
    })
}

/// Distance between centers minus the radius sum for the adjacent pair at
/// continuous index `y` (disks at `y` and `y+1`); positive means disjoint.
fn adjacent_margin(problem: &SpectralProblem, y: f64) -> f64 {
    let gap = (problem.disk_center(y + 1.0) - problem.disk_center(y)).norm();
    gap - (problem.disk_radius(y) + problem.disk_radius(y + 1.0))
}

/// Whether `D_k(μ)` and `D_{k+1}(μ)` are disjoint, evaluated exactly from
/// the disk formulas. Tangency counts as intersecting (closed disks).
pub fn adjacent_disjoint(problem: &SpectralProblem, k: i64, mu: f64) -> Result<bool> {
    check_mu(mu)?;
    Ok(adjacent_margin(problem, k as f64 + mu) > 0.0)
}

const THRESHOLD_SCAN_STEP: f64 = 1e-2;
const THRESHOLD_SCAN_HORIZON: f64 = 400.0;

/// The continuous adjacent-disjointness threshold: the largest `y* ≥ 0`
/// at which the pair of disks at `(y, y+1)` stops being disjoint, so that
/// adjacent disks are disjoint whenever `k + μ > y*`. Fails for families
/// whose disks never separate (Benjamin–Ono).
pub fn adjacent_disjoint_threshold(problem: &SpectralProblem) -> Result<f64> {
    if problem.family() == EquationFamily::BenjaminOno {
        return Err(Error::NotApplicable(
            "Benjamin-Ono disks never become disjoint".into(),
        ));
    }
    if problem.radius_norm() == 0.0 {
        return Ok(0.0);
    }
    // Last sign change of the margin on a scan grid, refined by bisection.
    let mut last_crossing: Option<(f64, f64)> = None;
    let mut y = 0.0;
    let mut prev = adjacent_margin(problem, y);
    while y < THRESHOLD_SCAN_HORIZON {
        let next = y + THRESHOLD_SCAN_STEP;
        let value = adjacent_margin(problem, next);
        if prev <= 0.0 && value > 0.0 {
            last_crossing = Some((y, next));
        }
        if value <= 0.0 {
            last_crossing = None; // still overlapping further out
        }
        prev = value;
        y = next;
    }
    let (mut lo, mut hi) = last_crossing.ok_or_else(|| {
        Error::NotApplicable("no disjointness threshold found within the scan horizon".into())
    })?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if adjacent_margin(problem, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Analytic tail indices: every disk with `k ≥ k_star` or `k ≤ k_lower`
/// is disjoint from all other disks, for every μ in `(-1/2, 1/2]`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TailBound {
    /// The fractional threshold quoted by the family lemma (`k*` for
    /// gKdV-type, the BBM spacing threshold, or the scanned crossing).
    pub fractional: f64,
    /// First index that is certainly disjoint from every other disk.
    pub k_star: i64,
    /// Mirror index on the negative side (`-k_star` by oddness).
    pub k_lower: i64,
}

/// Sufficient condition that makes *all* disks disjoint for every μ, so
/// the whole spectrum is confined to the imaginary axis: for gKdV
/// `‖Q̂‖₁² < 3c(2π/T)²`, for BBM `2π|c|/T > ‖Q̂‖₁`.
pub fn all_disjoint_sufficient(problem: &SpectralProblem) -> Result<bool> {
    let q1 = problem.radius_norm();
    let h = 2.0 * std::f64::consts::PI / problem.period();
    match problem.family() {
        EquationFamily::GKdv => Ok(q1 * q1 < 3.0 * problem.wave_speed() * h * h),
        EquationFamily::Bbm => Ok(h * problem.wave_speed().abs() > q1),
        other => Err(Error::NotApplicable(format!(
            "no all-disjoint criterion for {other:?}"
        ))),
    }
}

/// Analytic (or scan-certified, for Kawahara) tail bound per family.
///
/// gKdV uses the closed form `k* = (T/2π)² (2‖Q̂‖₁ − c)/3` on the `c < 0`
/// branch and `(T/2π)² 2‖Q̂‖₁/3` otherwise; BBM uses the spacing
/// threshold `T²‖Q̂‖₁/(2π²|c|)`; Kawahara has no formula and is scanned;
/// Benjamin–Ono has no bound at all.
pub fn tail_index_bound(problem: &SpectralProblem) -> Result<TailBound> {
    let q1 = problem.radius_norm();
    let t_over = problem.period() / (2.0 * std::f64::consts::PI);
    match problem.family() {
        EquationFamily::GKdv => {
            if all_disjoint_sufficient(problem)? {
                return Ok(TailBound {
                    fractional: 0.0,
                    k_star: 0,
                    k_lower: 0,
                });
            }
            let c = problem.wave_speed();
            let top = if c < 0.0 { 2.0 * q1 - c } else { 2.0 * q1 };
            let fractional = t_over * t_over * top / 3.0;
            // The lemma reads "disjoint for |k| > k*".
            let k_star = fractional.floor() as i64 + 1;
            Ok(TailBound {
                fractional,
                k_star,
                k_lower: -k_star,
            })
        }
        EquationFamily::Bbm => {
            if all_disjoint_sufficient(problem)? {
                return Ok(TailBound {
                    fractional: 0.0,
                    k_star: 0,
                    k_lower: 0,
                });
            }
            let c = problem.wave_speed().abs();
            let fractional =
                problem.period().powi(2) * q1 / (2.0 * std::f64::consts::PI.powi(2) * c);
            // Pair (j, j+1) is disjoint for all mu once j - 1/2 >= threshold;
            // a disk needs both neighboring pairs safe.
            let k_star = (fractional + 0.5).ceil() as i64 + 1;
            Ok(TailBound {
                fractional,
                k_star,
                k_lower: -k_star,
            })
        }
        EquationFamily::Kawahara { .. } => kawahara_tail_scan(problem),
        EquationFamily::BenjaminOno => Err(Error::NotApplicable(
            "the Gershgorin disk argument offers no tail bound for Benjamin-Ono".into(),
        )),
    }
}

/// Number of consecutive certified indices required past a scanned
/// Kawahara threshold.
const KAWAHARA_CERTIFICATE_SPAN: f64 = 50.0;

/// Kawahara tail bound by outward scan: find the last adjacent-margin
/// crossing, push past the non-monotone hump of the centers, and make
/// sure the tail clears every hump disk. Certified by a margin check on
/// the next fifty index units.
fn kawahara_tail_scan(problem: &SpectralProblem) -> Result<TailBound> {
    let EquationFamily::Kawahara { alpha } = problem.family() else {
        unreachable!()
    };
    let q0 = problem.potential().mean().re;
    let h = 2.0 * std::f64::consts::PI / problem.period();

    // Where the centers become monotone: largest root of
    // 5u² - 3αu + Q̂₀ = 0 in u = κ².
    let disc = 9.0 * alpha * alpha - 20.0 * q0;
    let y_mono = if disc > 0.0 {
        let u = (3.0 * alpha + disc.sqrt()) / 10.0;
        if u > 0.0 {
            u.sqrt() / h
        } else {
            0.0
        }
    } else {
        0.0
    };

    let y_adjacent = adjacent_disjoint_threshold(problem)?;

    // Tallest point of the hump region (both signs, radius included).
    let hump_edge = y_mono + 1.5;
    let mut hump_top = 0.0_f64;
    let steps = 2000;
    for i in 0..=steps {
        let y = -hump_edge + 2.0 * hump_edge * i as f64 / steps as f64;
        hump_top = hump_top.max(problem.disk_center(y).im.abs() + problem.disk_radius(y));
    }
    // First monotone y whose disk clears the hump entirely.
    let mut y_clear = y_mono.max(1.0);
    while problem.disk_center(y_clear).im - problem.disk_radius(y_clear) <= hump_top {
        y_clear += 0.05;
        if y_clear > THRESHOLD_SCAN_HORIZON {
            return Err(Error::NotApplicable(
                "Kawahara tail scan exceeded its horizon".into(),
            ));
        }
    }

    let y_star = y_adjacent.max(y_mono).max(y_clear);
    let k_star = (y_star + 0.5).ceil() as i64 + 1;

    // Certificate: the adjacent margin stays positive and eventually grows
    // over the next fifty index units.
    let mut prev = f64::NEG_INFINITY;
    let mut grew = true;
    let mut y = y_star + 1e-6;
    while y <= y_star + KAWAHARA_CERTIFICATE_SPAN {
        let margin = adjacent_margin(problem, y);
        if margin <= 0.0 {
            return Err(Error::NotApplicable(format!(
                "Kawahara certificate failed: margin {margin} at y = {y}"
            )));
        }
        if y > y_star + KAWAHARA_CERTIFICATE_SPAN - 5.0 {
            grew &= margin > prev;
        }
        prev = margin;
        y += 0.25;
    }
    if !grew {
        return Err(Error::NotApplicable(
            "Kawahara certificate failed: margin not growing at the horizon".into(),
        ));
    }

    Ok(TailBound {
        fractional: y_star,
        k_star,
        k_lower: -k_star,
    })
}

/// Disjoint-set forest over window indices.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, mut id: usize) -> usize {
        let mut root = id;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[id] != root {
            let next = self.parent[id];
            self.parent[id] = root;
            id = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] >= self.size[rb] {
            self.parent[rb] = ra;
            self.size[ra] += self.size[rb];
        } else {
            self.parent[ra] = rb;
            self.size[rb] += self.size[ra];
        }
    }
}

/// Axis-aligned bounding box of a disk union.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BoundingBox {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

/// One connected component of intersecting disks.
#[derive(Clone, Debug, Serialize)]
pub struct Component {
    /// Window indices belonging to the component, ascending.
    pub indices: Vec<i64>,
    pub bounding_box: BoundingBox,
    pub size: usize,
}

/// Component decomposition of the disks in a window `|k| ≤ window_N`.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentReport {
    pub mu: f64,
    pub window: usize,
    pub components: Vec<Component>,
    /// Tail indices when the family admits them.
    pub k_star: Option<i64>,
    pub k_lower: Option<i64>,
    /// Total size of all non-singleton components: the number of
    /// eigenvalues that may leave the imaginary axis.
    pub unstable_bound: usize,
}

impl ComponentReport {
    /// The component containing index `k`, if any.
    pub fn component_of(&self, k: i64) -> Option<&Component> {
        self.components.iter().find(|c| c.indices.contains(&k))
    }

    /// Largest component size in the window.
    pub fn largest(&self) -> usize {
        self.components.iter().map(|c| c.size).max().unwrap_or(0)
    }
}

/// Builds all disks for `|k| ≤ window_N`, forms the intersection graph by
/// the all-pairs test `|cᵢ − cⱼ| ≤ rᵢ + rⱼ` (ties intersect), and
/// partitions it with union-find. The window must reach the analytic tail
/// bound when the family has one, so no intersection is missed.
pub fn components(
    problem: &SpectralProblem,
    mu: f64,
    window_n: usize,
) -> Result<ComponentReport> {
    check_mu(mu)?;
    let tail = match tail_index_bound(problem) {
        Ok(bound) => {
            if (window_n as i64) < bound.k_star {
                return Err(Error::Window {
                    window: window_n,
                    k_star: bound.k_star,
                });
            }
            Some(bound)
        }
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };

    let w = window_n as i64;
    let disks: Vec<GershgorinDisk> = (-w..=w)
        .map(|k| disk(problem, k, mu))
        .collect::<Result<_>>()?;
    let count = disks.len();
    let mut forest = UnionFind::new(count);
    for i in 0..count {
        for j in i + 1..count {
            let gap = (disks[i].center - disks[j].center).norm();
            if gap <= disks[i].radius + disks[j].radius {
                forest.union(i, j);
            }
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..count {
        let root = forest.find(i);
        groups.entry(root).or_default().push(i);
    }
    let mut components: Vec<Component> = groups
        .into_values()
        .map(|members| {
            let indices: Vec<i64> = members.iter().map(|&i| disks[i].k).collect();
            let mut bbox = BoundingBox {
                re_min: f64::INFINITY,
                re_max: f64::NEG_INFINITY,
                im_min: f64::INFINITY,
                im_max: f64::NEG_INFINITY,
            };
            for &i in &members {
                let d = &disks[i];
                bbox.re_min = bbox.re_min.min(-d.radius);
                bbox.re_max = bbox.re_max.max(d.radius);
                bbox.im_min = bbox.im_min.min(d.center.im - d.radius);
                bbox.im_max = bbox.im_max.max(d.center.im + d.radius);
            }
            Component {
                size: indices.len(),
                indices,
                bounding_box: bbox,
            }
        })
        .collect();
    components.sort_by_key(|c| c.indices[0]);

    let unstable_bound = components
        .iter()
        .filter(|c| c.size >= 2)
        .map(|c| c.size)
        .sum();

    Ok(ComponentReport {
        mu,
        window: window_n,
        components,
        k_star: tail.map(|t| t.k_star),
        k_lower: tail.map(|t| t.k_lower),
        unstable_bound,
    })
}

/// All disks of a window, for export and figures.
pub fn window_disks(
    problem: &SpectralProblem,
    mu: f64,
    window_n: usize,
) -> Result<Vec<GershgorinDisk>> {
    let w = window_n as i64;
    (-w..=w).map(|k| disk(problem, k, mu)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dispersion::{DispersionRelation, MeanPolicy};
    use crate::potentials::{build_problem, PeriodicPotential, WaveFamilyParams};

    fn mkdv() -> SpectralProblem {
        build_problem(
            &WaveFamilyParams::MKdVCnoidal {
                amplitude: 1.0,
                m: 0.5,
            },
            32,
        )
        .unwrap()
    }

    fn bbm() -> SpectralProblem {
        build_problem(&WaveFamilyParams::BBMCnoidal { m: 0.75 }, 32).unwrap()
    }

    fn kawahara() -> SpectralProblem {
        build_problem(
            &WaveFamilyParams::KawaharaCnQuartic {
                alpha: 2.0,
                sigma: 0.25,
                m: 0.6185,
                a1: 0.659,
                a2: 2.306,
                a3: -2.51,
            },
            32,
        )
        .unwrap()
    }

    fn benjamin_ono() -> SpectralProblem {
        build_problem(
            &WaveFamilyParams::BORational {
                c: 2.0,
                period: 2.0 * std::f64::consts::PI * 1.1,
            },
            64,
        )
        .unwrap()
    }

    fn unit_gkdv(c: f64) -> SpectralProblem {
        // T = 2pi and a single-harmonic potential with l1 norm 1.
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 3];
        coeffs[0] = Complex64::new(0.5, 0.0);
        coeffs[2] = Complex64::new(0.5, 0.0);
        let pot = PeriodicPotential::from_coefficients(2.0 * std::f64::consts::PI, coeffs).unwrap();
        SpectralProblem::new(
            DispersionRelation::new(EquationFamily::GKdv),
            c,
            pot,
            MeanPolicy::Absorbed,
        )
        .unwrap()
    }

    fn zero_gkdv() -> SpectralProblem {
        let pot = PeriodicPotential::zero(2.0 * std::f64::consts::PI, 2);
        SpectralProblem::new(
            DispersionRelation::new(EquationFamily::GKdv),
            1.0,
            pot,
            MeanPolicy::Absorbed,
        )
        .unwrap()
    }

    #[test]
    fn unit_disk_reference_values() {
        let problem = unit_gkdv(0.0);
        let d = disk(&problem, 2, 0.0).unwrap();
        assert!((d.center - Complex64::new(0.0, 8.0)).norm() < 1e-14);
        assert!((d.radius - 2.0).abs() < 1e-14);
    }

    #[test]
    fn zero_index_disk_has_zero_radius() {
        let problem = mkdv();
        let d = disk(&problem, 0, 0.0).unwrap();
        assert_eq!(d.radius, 0.0);
        assert_eq!(d.center, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn centers_are_purely_imaginary() {
        for problem in [mkdv(), bbm(), kawahara(), benjamin_ono()] {
            for k in -12..=12 {
                for mu in [-0.4, 0.0, 0.25, 0.5] {
                    let d = disk(&problem, k, mu).unwrap();
                    assert_eq!(d.center.re, 0.0);
                    assert!(d.radius >= 0.0);
                }
            }
        }
    }

    #[test]
    fn zero_potential_disks_are_always_disjoint() {
        let problem = zero_gkdv();
        for k in -20..=20 {
            assert!(adjacent_disjoint(&problem, k, 0.3).unwrap());
        }
    }

    #[test]
    fn mkdv_adjacent_threshold_matches_reference() {
        let threshold = adjacent_disjoint_threshold(&mkdv()).unwrap();
        assert!(
            (1.27..=1.37).contains(&threshold),
            "threshold = {threshold}"
        );
        // Disjoint above, overlapping below.
        assert!(adjacent_margin(&mkdv(), threshold + 0.01) > 0.0);
        assert!(adjacent_margin(&mkdv(), threshold - 0.01) < 0.0);
    }

    #[test]
    fn benjamin_ono_disks_never_separate() {
        let problem = benjamin_ono();
        for k in 1..=100 {
            assert!(
                !adjacent_disjoint(&problem, k, 0.0).unwrap(),
                "BO pair {k} unexpectedly disjoint"
            );
        }
        assert!(adjacent_disjoint_threshold(&problem).is_err());
        assert!(tail_index_bound(&problem).is_err());
    }

    #[test]
    fn benjamin_ono_impossibility_inequality() {
        // x/(1 - sqrt(1-x²)) >= 1 for the admissible range, so the spacing
        // condition can never dominate the radii.
        for i in 1..100 {
            let x = i as f64 / 100.0;
            assert!(x / (1.0 - (1.0 - x * x).sqrt()) >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn mkdv_tail_bound_reproduces_reference() {
        let bound = tail_index_bound(&mkdv()).unwrap();
        assert!(
            (2.10..=2.20).contains(&bound.fractional),
            "fractional = {}",
            bound.fractional
        );
        assert_eq!(bound.k_star, 3);
        assert_eq!(bound.k_lower, -3);
    }

    #[test]
    fn bbm_tail_bound_reproduces_reference() {
        let bound = tail_index_bound(&bbm()).unwrap();
        assert!(
            (bound.fractional - 8.48).abs() < 1e-2,
            "fractional = {}",
            bound.fractional
        );
        // "Disjoint for all |k| > 9."
        assert_eq!(bound.k_star, 10);
    }

    #[test]
    fn gkdv_all_disjoint_condition() {
        assert!(all_disjoint_sufficient(&unit_gkdv(10.0)).unwrap());
        assert!(!all_disjoint_sufficient(&unit_gkdv(-1.0)).unwrap());
        let bound = tail_index_bound(&unit_gkdv(10.0)).unwrap();
        assert_eq!((bound.k_star, bound.k_lower), (0, 0));
    }

    #[test]
    fn bbm_example_is_not_all_disjoint() {
        // 2pi * 2 / T ~ 2.06 < 9.
        assert!(!all_disjoint_sufficient(&bbm()).unwrap());
        assert!(all_disjoint_sufficient(&kawahara()).is_err());
    }

    #[test]
    fn mkdv_component_structure_at_mu_zero() {
        let report = components(&mkdv(), 0.0, 8).unwrap();
        assert_eq!(report.largest(), 5, "{report:?}");
        let big = report.component_of(0).unwrap();
        assert_eq!(big.indices, vec![-2, -1, 0, 1, 2]);
        assert_eq!(report.unstable_bound, 5);
        // Everything beyond the tail bound is a singleton.
        for c in &report.components {
            if c.size > 1 {
                continue;
            }
            assert_eq!(c.indices.len(), 1);
        }
    }

    #[test]
    fn kawahara_component_has_seven_disks_at_mu_zero() {
        let problem = kawahara();
        let bound = tail_index_bound(&problem).unwrap();
        let window = bound.k_star.unsigned_abs() as usize + 2;
        let report = components(&problem, 0.0, window).unwrap();
        assert_eq!(report.largest(), 7, "{:?}", report.components);
    }

    #[test]
    fn zero_potential_components_are_singletons() {
        let report = components(&zero_gkdv(), 0.3, 6).unwrap();
        assert_eq!(report.components.len(), 13);
        assert!(report.components.iter().all(|c| c.size == 1));
        assert_eq!(report.unstable_bound, 0);
    }

    #[test]
    fn window_below_tail_bound_is_rejected() {
        assert!(matches!(
            components(&mkdv(), 0.0, 2),
            Err(Error::Window { .. })
        ));
    }

    #[test]
    fn radius_growth_is_monotone_where_expected() {
        // KdV-type radii grow with k + mu > 0; BBM radii decay once
        // kappa > 1 because x/(1+x²) is decreasing there.
        let mu = 0.2;
        for problem in [mkdv(), kawahara(), benjamin_ono()] {
            for k in 0..30 {
                let a = problem.disk_radius(k as f64 + mu);
                let b = problem.disk_radius((k + 1) as f64 + mu);
                assert!(b > a, "{:?} radius not growing at k={k}", problem.family());
            }
        }
        let problem = bbm();
        let start = (problem.period() / (2.0 * std::f64::consts::PI)).ceil() as i64 + 1;
        for k in start..start + 30 {
            let a = problem.disk_radius(k as f64 + mu);
            let b = problem.disk_radius((k + 1) as f64 + mu);
            assert!(b < a, "BBM radius not decaying at k={k}");
        }
    }

    #[test]
    fn tail_consistency_for_fifty_indices() {
        for problem in [mkdv(), bbm(), kawahara()] {
            let bound = tail_index_bound(&problem).unwrap();
            for mu in [-0.49, 0.0, 0.25, 0.5] {
                for k in bound.k_star..bound.k_star + 50 {
                    assert!(
                        adjacent_disjoint(&problem, k, mu).unwrap(),
                        "{:?} pair {k} at mu={mu} not disjoint",
                        problem.family()
                    );
                }
            }
        }
    }

    #[test]
    fn unstable_bound_respects_the_corollary_count() {
        for problem in [mkdv(), bbm(), kawahara()] {
            let bound = tail_index_bound(&problem).unwrap();
            let window = bound.k_star.unsigned_abs() as usize + 4;
            for mu in [0.0, 0.1, 0.3, 0.5] {
                let report = components(&problem, mu, window).unwrap();
                assert!(
                    report.unstable_bound as i64 <= 2 * bound.k_star + 1,
                    "{:?} at mu={mu}: bound {} vs 2k*+1 = {}",
                    problem.family(),
                    report.unstable_bound,
                    2 * bound.k_star + 1
                );
            }
        }
    }

    #[test]
    fn indices_beyond_tail_bound_are_singletons() {
        for problem in [mkdv(), bbm(), kawahara()] {
            let bound = tail_index_bound(&problem).unwrap();
            let window = bound.k_star.unsigned_abs() as usize + 10;
            for mu in [-0.3, 0.0, 0.5] {
                let report = components(&problem, mu, window).unwrap();
                for c in &report.components {
                    if c.size > 1 {
                        for &k in &c.indices {
                            assert!(
                                k.abs() <= bound.k_star.max(bound.k_lower.abs()),
                                "{:?}: index {k} in a non-singleton component",
                                problem.family()
                            );
                        }
                    }
                }
            }
        }
    }
}
