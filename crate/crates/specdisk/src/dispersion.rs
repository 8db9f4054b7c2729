//! Dispersion relations and the canonical spectral problem.
//!
//! Every supported equation is brought to the canonical form
//!
//! ```text
//!     λ v = i ω(-i∂ₓ) v + c vₓ + W (Q(x) v)ₓ ,    v(T) = e^{2πiμ} v(0),
//! ```
//!
//! whose Fourier symbol on the diagonal is `i ω(κ) + i c κ` at the
//! quasi-wavenumber `κ = 2π(k+μ)/T`. The symplectic weight `W(κ)` is the
//! identity for KdV-type equations and `1/(1+κ²)` for BBM, where the
//! smoothing operator `(1-∂ₓ²)⁻¹` damps the nonlinear term.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potentials::PeriodicPotential;

/// Equation families supported by the analysis.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum EquationFamily {
    /// Generalized Korteweg–de Vries, `ω(κ) = κ³`.
    GKdv,
    /// Kawahara, `ω(κ) = κ⁵ − α κ³`. The sign convention matches the
    /// operator `∂ₓ⁵ + α ∂ₓ³`.
    Kawahara { alpha: f64 },
    /// Benjamin–Ono, `ω(κ) = κ²·sgn(κ) = κ|κ|`.
    BenjaminOno,
    /// Benjamin–Bona–Mahony. The constant-coefficient transport sits
    /// entirely in the wave speed `c`; `ω ≡ 0` and the weight decays.
    Bbm,
}

/// A dispersion relation `ω(κ)` with its growth degree and symplectic weight.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DispersionRelation {
    pub family: EquationFamily,
}

impl DispersionRelation {
    pub fn new(family: EquationFamily) -> Self {
        Self { family }
    }

    /// The frequency `ω(κ)`. Odd in `κ` for every family.
    pub fn omega(&self, kappa: f64) -> f64 {
        match self.family {
            EquationFamily::GKdv => kappa * kappa * kappa,
            EquationFamily::Kawahara { alpha } => {
                kappa.powi(5) - alpha * kappa.powi(3)
            }
            EquationFamily::BenjaminOno => kappa * kappa.abs(),
            EquationFamily::Bbm => 0.0,
        }
    }

    /// The analytic derivative `ω'(κ)`, the dispersive part of the group
    /// velocity. Benjamin–Ono has a kink at the origin, so `κ = 0` is
    /// rejected there; callers needing a bound near zero use one-sided
    /// limits.
    pub fn omega_prime(&self, kappa: f64) -> Result<f64> {
        match self.family {
            EquationFamily::GKdv => Ok(3.0 * kappa * kappa),
            EquationFamily::Kawahara { alpha } => {
                Ok(5.0 * kappa.powi(4) - 3.0 * alpha * kappa * kappa)
            }
            EquationFamily::BenjaminOno => {
                if kappa == 0.0 {
                    Err(Error::Domain(
                        "Benjamin-Ono group velocity is undefined at kappa = 0".into(),
                    ))
                } else {
                    Ok(2.0 * kappa.abs())
                }
            }
            EquationFamily::Bbm => Ok(0.0),
        }
    }

    /// The symplectic weight `W(κ)`: 1 except for BBM, where it is
    /// `1/(1+κ²)`.
    pub fn weight(&self, kappa: f64) -> f64 {
        match self.family {
            EquationFamily::Bbm => 1.0 / (1.0 + kappa * kappa),
            _ => 1.0,
        }
    }

    /// Asymptotic growth exponent `d` with `ω(κ) = O(|κ|^d)`.
    pub fn degree(&self) -> f64 {
        match self.family {
            EquationFamily::GKdv => 3.0,
            EquationFamily::Kawahara { .. } => 5.0,
            EquationFamily::BenjaminOno => 2.0,
            EquationFamily::Bbm => 1.0,
        }
    }
}

/// How the potential mean `Q̂₀` enters the disk geometry and the matrix
/// diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanPolicy {
    /// The mean has been absorbed into the wave speed; the potential must
    /// report zero mean (gKdV/mKdV).
    Absorbed,
    /// `Q̂₀` shifts the disk centers and the matrix diagonal, and the
    /// radius norm excludes it (Kawahara).
    InCenter,
    /// `Q̂₀` stays inside the ℓ¹ radius norm; centers carry no mean term
    /// even though the matrix diagonal does (BBM, Benjamin–Ono).
    InRadius,
}

/// The quasi-periodic eigenvalue problem for one traveling wave:
/// dispersion, canonical wave speed, potential, and mean convention.
#[derive(Clone, Debug)]
pub struct SpectralProblem {
    dispersion: DispersionRelation,
    wave_speed: f64,
    potential: PeriodicPotential,
    mean_policy: MeanPolicy,
}

impl SpectralProblem {
    pub fn new(
        dispersion: DispersionRelation,
        wave_speed: f64,
        potential: PeriodicPotential,
        mean_policy: MeanPolicy,
    ) -> Result<Self> {
        if !(potential.period() > 0.0) {
            return Err(Error::Domain("potential period must be positive".into()));
        }
        if mean_policy == MeanPolicy::Absorbed && potential.mean().norm() >= 1e-12 {
            return Err(Error::Domain(format!(
                "mean-absorbed problem requires a zero-mean potential, got |Q_0| = {:.3e}",
                potential.mean().norm()
            )));
        }
        Ok(Self {
            dispersion,
            wave_speed,
            potential,
            mean_policy,
        })
    }

    pub fn dispersion(&self) -> &DispersionRelation {
        &self.dispersion
    }

    pub fn family(&self) -> EquationFamily {
        self.dispersion.family
    }

    /// Canonical wave speed (mean already absorbed when the policy says so).
    pub fn wave_speed(&self) -> f64 {
        self.wave_speed
    }

    pub fn potential(&self) -> &PeriodicPotential {
        &self.potential
    }

    pub fn mean_policy(&self) -> MeanPolicy {
        self.mean_policy
    }

    /// Whether `Q̂₀` appears on the matrix diagonal.
    pub fn mean_in_diagonal(&self) -> bool {
        self.mean_policy != MeanPolicy::Absorbed
    }

    pub fn period(&self) -> f64 {
        self.potential.period()
    }

    /// Quasi-wavenumber `κ = 2π y / T` for the continuous disk index
    /// `y = k + μ`.
    pub fn kappa(&self, y: f64) -> f64 {
        2.0 * std::f64::consts::PI * y / self.period()
    }

    /// The ℓ¹ norm entering the disk radii: the mean is excluded unless the
    /// family keeps it inside the radius bound.
    pub fn radius_norm(&self) -> f64 {
        match self.mean_policy {
            MeanPolicy::InRadius => self.potential.l1_with_mean(),
            _ => self.potential.l1_no_mean(),
        }
    }

    /// Disk center at continuous index `y = k + μ`: purely imaginary,
    /// `i(ω(κ) + cκ)` plus `iκW(κ)Q̂₀` when the mean sits in the center.
    pub fn disk_center(&self, y: f64) -> Complex64 {
        let kappa = self.kappa(y);
        let mut im = self.dispersion.omega(kappa) + self.wave_speed * kappa;
        if self.mean_policy == MeanPolicy::InCenter {
            im += kappa * self.dispersion.weight(kappa) * self.potential.mean().re;
        }
        Complex64::new(0.0, im)
    }

    /// Disk radius at continuous index `y = k + μ`.
    pub fn disk_radius(&self, y: f64) -> f64 {
        let kappa = self.kappa(y);
        kappa.abs() * self.dispersion.weight(kappa) * self.radius_norm()
    }

    /// Diagonal entry of the truncated operator at index `y = k + μ` with
    /// the potential scaled by `tau`. The mean term is scaled only when it
    /// is accounted for by the (scaled) radius rather than the center.
    pub fn matrix_diagonal(&self, y: f64, tau: f64) -> Complex64 {
        let mut diag = self.disk_center(y);
        if self.mean_policy == MeanPolicy::InRadius {
            let kappa = self.kappa(y);
            diag.im += tau * kappa * self.dispersion.weight(kappa) * self.potential.mean().re;
        }
        diag
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::Lcg;

    const FAMILIES: [EquationFamily; 4] = [
        EquationFamily::GKdv,
        EquationFamily::Kawahara { alpha: 2.0 },
        EquationFamily::BenjaminOno,
        EquationFamily::Bbm,
    ];

    #[test]
    fn omega_reference_values() {
        let gkdv = DispersionRelation::new(EquationFamily::GKdv);
        assert_eq!(gkdv.omega(2.0), 8.0);

        let kawahara = DispersionRelation::new(EquationFamily::Kawahara { alpha: 2.0 });
        assert_eq!(kawahara.omega(1.0), -1.0);

        let bo = DispersionRelation::new(EquationFamily::BenjaminOno);
        assert_eq!(bo.omega(-3.0), -9.0);

        let bbm = DispersionRelation::new(EquationFamily::Bbm);
        assert_eq!(bbm.omega(17.3), 0.0);
    }

    #[test]
    fn omega_prime_reference_values() {
        let gkdv = DispersionRelation::new(EquationFamily::GKdv);
        assert_eq!(gkdv.omega_prime(2.0).unwrap(), 12.0);

        let kawahara = DispersionRelation::new(EquationFamily::Kawahara { alpha: 2.0 });
        assert_eq!(kawahara.omega_prime(1.0).unwrap(), -1.0);
    }

    #[test]
    fn benjamin_ono_kink_rejected() {
        let bo = DispersionRelation::new(EquationFamily::BenjaminOno);
        assert!(bo.omega_prime(0.0).is_err());
        assert_eq!(bo.omega_prime(1e-9).unwrap(), 2e-9);
    }

    #[test]
    fn omega_prime_matches_finite_difference() {
        // Centered finite difference with step 1e-5, relative tolerance 1e-6.
        let h = 1e-5;
        for family in FAMILIES {
            let disp = DispersionRelation::new(family);
            let mut kappa = 0.7;
            while kappa < 12.0 {
                let fd = (disp.omega(kappa + h) - disp.omega(kappa - h)) / (2.0 * h);
                let exact = disp.omega_prime(kappa).unwrap();
                assert!(
                    (exact - fd).abs() <= 1e-6 * (1.0 + exact.abs()),
                    "{family:?} at kappa={kappa}: exact {exact}, fd {fd}"
                );
                kappa += 0.7;
            }
        }
    }

    #[test]
    fn omega_is_odd() {
        let mut rng = Lcg::new(0x5eed);
        for family in FAMILIES {
            let disp = DispersionRelation::new(family);
            for _ in 0..1000 {
                let kappa = 100.0 * (rng.uniform() - 0.5);
                assert_eq!(
                    disp.omega(kappa) + disp.omega(-kappa),
                    0.0,
                    "{family:?} fails oddness at kappa={kappa}"
                );
            }
        }
    }

    #[test]
    fn weight_reference_values() {
        let gkdv = DispersionRelation::new(EquationFamily::GKdv);
        assert_eq!(gkdv.weight(100.0), 1.0);

        let bbm = DispersionRelation::new(EquationFamily::Bbm);
        assert_eq!(bbm.weight(0.0), 1.0);
        assert!((bbm.weight(3.0) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn weight_is_even_and_positive() {
        let mut rng = Lcg::new(42);
        for family in FAMILIES {
            let disp = DispersionRelation::new(family);
            for _ in 0..200 {
                let kappa = 100.0 * (rng.uniform() - 0.5);
                let w = disp.weight(kappa);
                assert!(w > 0.0);
                assert_eq!(w, disp.weight(-kappa));
            }
        }
    }

    #[test]
    fn absorbed_mean_requires_zero_mean_potential() {
        let pot = crate::potentials::PeriodicPotential::zero(2.0 * std::f64::consts::PI, 4);
        let disp = DispersionRelation::new(EquationFamily::GKdv);
        assert!(SpectralProblem::new(disp, 1.0, pot, MeanPolicy::Absorbed).is_ok());

        let mut coeffs = vec![Complex64::new(0.0, 0.0); 9];
        coeffs[4] = Complex64::new(0.5, 0.0); // k = 0
        let pot = crate::potentials::PeriodicPotential::from_coefficients(
            2.0 * std::f64::consts::PI,
            coeffs,
        )
        .unwrap();
        assert!(SpectralProblem::new(disp, 1.0, pot, MeanPolicy::Absorbed).is_err());
    }
}
