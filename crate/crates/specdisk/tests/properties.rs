//! Property suites for the structural invariants: dispersion symmetry,
//! potential reality and Parseval, disk geometry, and the exact float
//! round-trip of the table formats.

use num_complex::Complex64;
use proptest::prelude::*;

use specdisk::dispersion::DispersionRelation;
use specdisk::elliptic::{elliptic_k, jacobi_sn_cn_dn};
use specdisk::potentials::{self, WaveFamilyParams};
use specdisk::EquationFamily;

fn families() -> Vec<EquationFamily> {
    vec![
        EquationFamily::GKdv,
        EquationFamily::Kawahara { alpha: 2.0 },
        EquationFamily::Kawahara { alpha: -0.5 },
        EquationFamily::BenjaminOno,
        EquationFamily::Bbm,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn omega_is_exactly_odd(kappa in -50.0f64..50.0) {
        for family in families() {
            let disp = DispersionRelation::new(family);
            prop_assert_eq!(disp.omega(kappa) + disp.omega(-kappa), 0.0);
        }
    }

    #[test]
    fn weight_is_even_positive_and_bounded(kappa in -50.0f64..50.0) {
        for family in families() {
            let disp = DispersionRelation::new(family);
            let w = disp.weight(kappa);
            prop_assert!(w > 0.0 && w <= 1.0);
            prop_assert_eq!(w, disp.weight(-kappa));
        }
    }

    #[test]
    fn omega_prime_agrees_with_finite_differences(kappa in 0.3f64..20.0, negate in any::<bool>()) {
        let kappa = if negate { -kappa } else { kappa };
        let h = 1e-5;
        for family in families() {
            let disp = DispersionRelation::new(family);
            let fd = (disp.omega(kappa + h) - disp.omega(kappa - h)) / (2.0 * h);
            let exact = disp.omega_prime(kappa).unwrap();
            prop_assert!((exact - fd).abs() <= 1e-6 * (1.0 + exact.abs()));
        }
    }

    #[test]
    fn jacobi_identities_hold(u in -20.0f64..20.0, m in 0.0f64..0.98) {
        let (sn, cn, dn) = jacobi_sn_cn_dn(u, m).unwrap();
        prop_assert!((sn * sn + cn * cn - 1.0).abs() < 1e-11);
        prop_assert!((dn * dn - (1.0 - m * sn * sn)).abs() < 1e-11);
        let period = 4.0 * elliptic_k(m).unwrap();
        let again = jacobi_sn_cn_dn(u + period, m).unwrap();
        prop_assert!((cn - again.1).abs() < 1e-9);
    }

    #[test]
    fn disk_centers_stay_on_the_imaginary_axis(
        k in -40i64..40,
        mu in prop::num::f64::NORMAL.prop_filter("floquet range", |m| *m > -0.5 && *m <= 0.5),
    ) {
        let problem = potentials::build_problem(
            &WaveFamilyParams::BBMCnoidal { m: 0.75 },
            32,
        ).unwrap();
        let disk = specdisk::disks::disk(&problem, k, mu).unwrap();
        prop_assert_eq!(disk.center.re, 0.0);
        prop_assert!(disk.radius >= 0.0);
    }

    #[test]
    fn table_floats_round_trip_exactly(bits in any::<u64>()) {
        let value = f64::from_bits(bits);
        prop_assume!(value.is_finite());
        let text = format!("{value}");
        let back: f64 = text.parse().unwrap();
        prop_assert_eq!(back.to_bits(), value.to_bits());
    }
}

proptest! {
    // Potential builds run a DFT per case; keep the count moderate.
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn mkdv_potentials_are_real_with_parseval(m in 0.05f64..0.9, amplitude in 0.5f64..1.5) {
        let params = WaveFamilyParams::MKdVCnoidal { amplitude, m };
        let (pot, _) = potentials::build_potential(&params, 32).unwrap();
        let period = pot.period();
        let n = 512;
        let mut grid_power = 0.0;
        for j in 0..n {
            let x = period * j as f64 / n as f64;
            let z = pot.evaluate(x);
            prop_assert!(z.im.abs() <= 1e-10);
            grid_power += z.re * z.re;
        }
        grid_power /= n as f64;
        let coeff_power: f64 = pot.coefficients().iter().map(|c| c.norm_sqr()).sum();
        prop_assert!((grid_power - coeff_power).abs() <= 1e-8 * (1.0 + grid_power));
    }

    #[test]
    fn bo_norm_is_consistent_with_its_series(c in 1.0f64..10.0, slack in 1.15f64..4.0) {
        let period = 2.0 * std::f64::consts::PI * slack / c;
        let closed = potentials::bo_l1_norm(c, period).unwrap();
        let mut series = potentials::bo_fourier_coefficient(c, period, 0).unwrap();
        for k in 1..2000 {
            let term = 2.0 * potentials::bo_fourier_coefficient(c, period, k).unwrap();
            series += term;
            if term < 1e-16 * series {
                break;
            }
        }
        prop_assert!((closed - series).abs() <= 1e-9 * closed);
        // Coefficients decay geometrically with an even profile.
        let r1 = potentials::bo_fourier_coefficient(c, period, 1).unwrap();
        let r2 = potentials::bo_fourier_coefficient(c, period, 2).unwrap();
        prop_assert!(r2 < r1 && r1 < potentials::bo_fourier_coefficient(c, period, 0).unwrap());
        prop_assert_eq!(
            potentials::bo_fourier_coefficient(c, period, -5).unwrap(),
            potentials::bo_fourier_coefficient(c, period, 5).unwrap()
        );
    }

    #[test]
    fn hamiltonian_symmetry_on_random_floquet_exponents(mu in -0.49f64..0.5) {
        let problem = potentials::build_problem(
            &WaveFamilyParams::MKdVCnoidal { amplitude: 1.0, m: 0.5 },
            20,
        ).unwrap();
        let spectrum = specdisk::hill::solve(&problem, mu, 24).unwrap();
        let max_norm = spectrum.eigenvalues.iter().map(|l| l.norm()).fold(0.0, f64::max);
        let tol = 1e-6 * (1.0 + max_norm);
        for lambda in &spectrum.eigenvalues {
            let reflected = -lambda.conj();
            let nearest = spectrum
                .eigenvalues
                .iter()
                .map(|o| (reflected - o).norm())
                .fold(f64::INFINITY, f64::min);
            prop_assert!(nearest <= tol);
        }
    }
}

#[test]
fn complex_table_entries_round_trip_through_csv() {
    // A focused deterministic complement to the proptest above: denormals,
    // negative zero, and long-mantissa values.
    let values = [
        0.0,
        -0.0,
        f64::MIN_POSITIVE,
        -f64::MIN_POSITIVE / 4.0,
        1.0 / 3.0,
        -1.629159376352909,
        2.438148361132261e8,
        5e-324,
    ];
    for &v in &values {
        let z = Complex64::new(v, -v);
        let line = format!("{},{}", z.re, z.im);
        let parts: Vec<&str> = line.split(',').collect();
        let re: f64 = parts[0].parse().unwrap();
        let im: f64 = parts[1].parse().unwrap();
        assert_eq!(re.to_bits(), z.re.to_bits());
        assert_eq!(im.to_bits(), z.im.to_bits());
    }
}
