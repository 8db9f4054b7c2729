//! Shared helpers for the integration suites: a characteristic-polynomial
//! root-finding oracle that never touches the QR eigensolver path, and a
//! deterministic generator for test matrices.

use num_complex::Complex64;

/// Tiny deterministic generator (same recurrence as the unit suites).
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493))
    }

    pub fn uniform(&mut self) -> f64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(2.0 * self.uniform() - 1.0, 2.0 * self.uniform() - 1.0)
    }
}

/// Dense row-major complex matrix for oracle-side computations.
#[derive(Clone)]
pub struct DenseMatrix {
    pub n: usize,
    pub a: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            a: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] = v;
    }

    fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..n {
                    acc += self.get(i, t) * other.get(t, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Characteristic polynomial coefficients by Faddeev–LeVerrier:
/// `p(λ) = λ^n + c_1 λ^{n-1} + ... + c_n`. Adequate for n ≤ 9.
pub fn characteristic_polynomial(mat: &DenseMatrix) -> Vec<Complex64> {
    let n = mat.n;
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut work = mat.clone();
    for k in 1..=n {
        let ck = -work.trace() / k as f64;
        coeffs.push(ck);
        if k == n {
            break;
        }
        let mut shifted = work.clone();
        for i in 0..n {
            let v = shifted.get(i, i) + ck;
            shifted.set(i, i, v);
        }
        work = mat.matmul(&shifted);
    }
    coeffs
}

/// All roots of a monic polynomial by Durand–Kerner iteration.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = coeffs[0];
        for c in &coeffs[1..] {
            acc = acc * x + c;
        }
        acc
    };
    let bound = 1.0 + coeffs[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / degree as f64;
            bound * Complex64::new(angle.cos(), angle.sin())
        })
        .collect();
    for _ in 0..600 {
        let mut advance = 0.0_f64;
        for i in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            advance = advance.max(step.norm());
        }
        if advance < 1e-14 * bound {
            break;
        }
    }
    roots
}

/// Eigenvalues through the oracle path (char poly + root finder).
pub fn oracle_eigenvalues(mat: &DenseMatrix) -> Vec<Complex64> {
    polynomial_roots(&characteristic_polynomial(mat))
}

/// Greedy one-to-one matching distance between two equal-length complex
/// multisets: repeatedly pairs the closest remaining points and returns
/// the largest matched distance.
pub fn matching_distance(left: &[Complex64], right: &[Complex64]) -> f64 {
    assert_eq!(left.len(), right.len());
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            pairs.push(((a - b).norm(), i, j));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut used_left = vec![false; left.len()];
    let mut used_right = vec![false; right.len()];
    let mut worst = 0.0_f64;
    let mut matched = 0;
    for (d, i, j) in pairs {
        if used_left[i] || used_right[j] {
            continue;
        }
        used_left[i] = true;
        used_right[j] = true;
        worst = worst.max(d);
        matched += 1;
        if matched == left.len() {
            break;
        }
    }
    worst
}
