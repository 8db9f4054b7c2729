//! Small dense discrete Fourier transforms.
//!
//! Grid sizes here stay in the hundreds, so the O(n²) transforms below are
//! plenty; a twiddle table indexed by `j·t mod n` keeps them exact and
//! cheap. Coefficients follow the convention
//! `Q(x) = Σ_k Q̂_k e^{2πikx/T}` with `Q̂_k = (1/T)∫ Q e^{-2πikx/T} dx`.

use num_complex::Complex64;

fn twiddle_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|t| {
            let angle = -2.0 * std::f64::consts::PI * t as f64 / n as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect()
}

/// Forward transform of a complex grid, unnormalized:
/// `X_j = Σ_t x_t e^{-2πi jt/n}`.
pub(crate) fn dft(samples: &[Complex64]) -> Vec<Complex64> {
    let n = samples.len();
    let tw = twiddle_table(n);
    (0..n)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, &x) in samples.iter().enumerate() {
                acc += x * tw[(j * t) % n];
            }
            acc
        })
        .collect()
}

/// Inverse transform, normalized: `x_t = (1/n) Σ_j X_j e^{+2πi jt/n}`.
pub(crate) fn idft(bins: &[Complex64]) -> Vec<Complex64> {
    let n = bins.len();
    let tw = twiddle_table(n);
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|t| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &x) in bins.iter().enumerate() {
                acc += x * tw[(j * t) % n].conj();
            }
            acc * scale
        })
        .collect()
}

/// Signed wavenumber of DFT bin `j` on an `n`-point grid.
pub(crate) fn bin_index(j: usize, n: usize) -> i64 {
    if j <= n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

/// Fourier coefficients `Q̂_k`, `k = -M..=M`, of real periodic samples on a
/// uniform grid (left endpoints, period not repeated). Spectrally accurate
/// for smooth data as long as `n` comfortably exceeds `2M`.
pub(crate) fn coefficients_from_samples(samples: &[f64], max_harmonic: usize) -> Vec<Complex64> {
    let n = samples.len();
    assert!(n > 2 * max_harmonic, "grid too coarse for requested harmonics");
    let tw = twiddle_table(n);
    let scale = 1.0 / n as f64;
    let m = max_harmonic as i64;
    (-m..=m)
        .map(|k| {
            let kk = k.rem_euclid(n as i64) as usize;
            let mut acc = Complex64::new(0.0, 0.0);
            for (t, &x) in samples.iter().enumerate() {
                acc += tw[(kk * t) % n] * x;
            }
            acc * scale
        })
        .collect()
}

/// Spectral derivative of order `order` of real periodic samples.
/// The Nyquist bin is zeroed for odd orders, as usual for real data.
pub(crate) fn spectral_derivative(samples: &[f64], period: f64, order: u32) -> Vec<f64> {
    let n = samples.len();
    let grid: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let mut bins = dft(&grid);
    for (j, bin) in bins.iter_mut().enumerate() {
        let k = bin_index(j, n);
        if order % 2 == 1 && n % 2 == 0 && j == n / 2 {
            *bin = Complex64::new(0.0, 0.0);
            continue;
        }
        let kappa = 2.0 * std::f64::consts::PI * k as f64 / period;
        *bin *= Complex64::new(0.0, kappa).powu(order);
    }
    idft(&bins).into_iter().map(|z| z.re).collect()
}
