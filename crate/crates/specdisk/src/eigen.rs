//! Dense complex nonsymmetric eigenvalue solver.
//!
//! The classic chain: diagonal balancing in powers of two, Householder
//! reduction to upper Hessenberg form, then single-shift QR iteration with
//! Wilkinson shifts and deflation until the matrix is triangular. Only
//! eigenvalues are produced; no Schur vectors are accumulated. Matrices
//! here are a few hundred rows at most, so the focus is robustness, not
//! blocking.

use num_complex::Complex64;

use crate::dd::{CDd, Dd, LuDd};
use crate::error::{Error, Result};

const RADIX: f64 = 2.0;
const MAX_SWEEPS_PER_EIGENVALUE: usize = 40;

/// Minimal dense row-major complex matrix.
#[derive(Clone, Debug)]
pub(crate) struct CMat {
    pub n: usize,
    pub a: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            a: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] = v;
    }

    #[inline]
    pub fn add_assign(&mut self, i: usize, j: usize, v: Complex64) {
        self.a[i * self.n + j] += v;
    }

    /// Largest absolute row sum (infinity norm).
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Balance by diagonal similarity with power-of-two factors so that row
/// and column norms are comparable; eigenvalues are unchanged and the QR
/// iteration sees a better-conditioned matrix.
fn balance(h: &mut CMat) {
    let n = h.n;
    let b2 = RADIX * RADIX;
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut c: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| h.get(j, i).norm())
                .sum();
            let mut r: f64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| h.get(i, j).norm())
                .sum();
            if c == 0.0 || r == 0.0 || !c.is_finite() || !r.is_finite() {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / RADIX {
                f *= RADIX;
                c *= b2;
                r /= b2;
            }
            while c >= r * RADIX {
                f /= RADIX;
                c /= b2;
                r *= b2;
            }
            if (c + r) < 0.95 * s {
                converged = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    let v = h.get(i, j) * inv;
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = h.get(j, i) * f;
                    h.set(j, i, v);
                }
            }
        }
        if converged {
            break;
        }
    }
}

/// Householder similarity reduction to upper Hessenberg form, in place.
fn hessenberg(h: &mut CMat) {
    let n = h.n;
    for k in 0..n.saturating_sub(2) {
        // Reflector from the subcolumn below the subdiagonal.
        let norm_x: f64 = (k + 1..n)
            .map(|i| h.get(i, k).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = h.get(k + 1, k);
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let alpha = -phase * norm_x;
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| h.get(i, k)).collect();
        v[0] -= alpha;
        let vhv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vhv == 0.0 {
            continue;
        }
        let beta = 2.0 / vhv;

        // Left: rows k+1..n of columns k..n get (I - beta v v^H) applied.
        for j in k..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                dot += vi.conj() * h.get(k + 1 + t, j);
            }
            dot *= beta;
            for (t, vi) in v.iter().enumerate() {
                h.add_assign(k + 1 + t, j, -dot * vi);
            }
        }
        // Right: all rows, columns k+1..n.
        for i in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (t, vi) in v.iter().enumerate() {
                dot += h.get(i, k + 1 + t) * vi;
            }
            dot *= beta;
            for (t, vi) in v.iter().enumerate() {
                h.add_assign(i, k + 1 + t, -dot * vi.conj());
            }
        }
        // Enforce the exact zeros the reflector produced.
        h.set(k + 1, k, alpha);
        for i in k + 2..n {
            h.set(i, k, Complex64::new(0.0, 0.0));
        }
    }
}

/// Complex Givens rotation `[c, s; -conj(s), c]` with real `c` that maps
/// `(f, g)` to `(r, 0)`.
fn givens(f: Complex64, g: Complex64) -> (f64, Complex64, Complex64) {
    let fn_ = f.norm();
    let gn = g.norm();
    if gn == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0), f);
    }
    if fn_ == 0.0 {
        return (0.0, g.conj() / gn, Complex64::new(gn, 0.0));
    }
    let r = (fn_ * fn_ + gn * gn).sqrt();
    let c = fn_ / r;
    let phase = f / fn_;
    let s = phase * g.conj() / r;
    (c, s, phase * r)
}

/// Wilkinson shift: the eigenvalue of the trailing 2x2 block closest to
/// its bottom-right entry.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let tr_half = 0.5 * (a + d);
    let disc = (0.5 * (a - d)) * (0.5 * (a - d)) + b * c;
    let root = disc.sqrt();
    let lam1 = tr_half + root;
    let lam2 = tr_half - root;
    if (lam1 - d).norm() <= (lam2 - d).norm() {
        lam1
    } else {
        lam2
    }
}

/// One explicit shifted QR sweep on the active Hessenberg block
/// `lo..=hi`, in place.
fn qr_sweep(h: &mut CMat, lo: usize, hi: usize, shift: Complex64) {
    // Factor H - sigma I = Q R with Givens rotations...
    for i in lo..=hi {
        h.add_assign(i, i, -shift);
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for i in lo..hi {
        let (c, s, r) = givens(h.get(i, i), h.get(i + 1, i));
        h.set(i, i, r);
        h.set(i + 1, i, Complex64::new(0.0, 0.0));
        for j in i + 1..=hi {
            let top = h.get(i, j);
            let bot = h.get(i + 1, j);
            h.set(i, j, c * top + s * bot);
            h.set(i + 1, j, -s.conj() * top + c * bot);
        }
        rotations.push((c, s));
    }
    // ... then form R Q + sigma I, applying the adjoint rotations on the
    // right (columns i, i+1).
    for (t, &(c, s)) in rotations.iter().enumerate() {
        let i = lo + t;
        for row in lo..=(i + 1).min(hi) {
            let left = h.get(row, i);
            let right = h.get(row, i + 1);
            h.set(row, i, left * c + right * s.conj());
            h.set(row, i + 1, -left * s + right * c);
        }
    }
    for i in lo..=hi {
        h.add_assign(i, i, shift);
    }
}

/// All eigenvalues of a dense complex matrix, unordered.
pub(crate) fn eigenvalues(mat: &CMat) -> Result<Vec<Complex64>> {
    let n = mat.n;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = mat.clone();
    balance(&mut h);
    hessenberg(&mut h);

    // Deflation compares a subdiagonal against its local neighborhood
    // only (plus an underflow floor); a global eps*norm threshold would
    // perturb small-magnitude eigenvalue clusters of badly scaled
    // matrices far more than the QR arithmetic itself.
    let scale = h.norm_inf().max(f64::MIN_POSITIVE);
    let smlnum = f64::MIN_POSITIVE / f64::EPSILON * n as f64;
    let mut eigs = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut sweeps_at_hi = 0usize;
    let mut total_cap = MAX_SWEEPS_PER_EIGENVALUE * n.max(1);

    loop {
        // Deflate any negligible subdiagonals.
        let mut k = hi;
        while k > 0 {
            let sub = h.get(k, k - 1).norm();
            let mut local = h.get(k - 1, k - 1).norm() + h.get(k, k).norm();
            if local == 0.0 {
                local = scale;
            }
            if sub <= f64::EPSILON * local || sub <= smlnum {
                h.set(k, k - 1, Complex64::new(0.0, 0.0));
                break;
            }
            k -= 1;
        }
        let lo = k;

        if lo == hi {
            // 1x1 block converged.
            eigs.push(h.get(hi, hi));
            if hi == 0 {
                break;
            }
            hi -= 1;
            sweeps_at_hi = 0;
            continue;
        }

        if sweeps_at_hi >= MAX_SWEEPS_PER_EIGENVALUE || total_cap == 0 {
            return Err(Error::Convergence {
                iterations: MAX_SWEEPS_PER_EIGENVALUE,
            });
        }

        // Wilkinson shift, with an occasional exceptional shift to break
        // symmetric stalls.
        let shift = if sweeps_at_hi > 0 && sweeps_at_hi % 10 == 0 {
            let mag = h.get(hi, hi - 1).norm() + h.get(hi, hi).norm();
            h.get(hi, hi) + Complex64::new(0.75 * mag, 0.4375 * mag)
        } else {
            wilkinson_shift(
                h.get(hi - 1, hi - 1),
                h.get(hi - 1, hi),
                h.get(hi, hi - 1),
                h.get(hi, hi),
            )
        };
        qr_sweep(&mut h, lo, hi, shift);
        sweeps_at_hi += 1;
        total_cap -= 1;
    }

    Ok(eigs)
}

/// Recomputes the eigenvalues belonging to a tight cluster in extended
/// precision: inverse subspace iteration against the exact f64 matrix in
/// double-double arithmetic, then the eigenvalues of the compressed
/// block. A defective cluster that plain QR can only localize to
/// ~sqrt(eps·‖H‖) comes back around 1e-12.
///
/// `isolation` is the distance from the cluster to the nearest foreign
/// eigenvalue. The shift sits at a fraction of it: close enough for the
/// iteration to converge fast, far enough that the resolvent of a
/// defective cluster (which blows up like the inverse square of the
/// distance) does not burn the extended digits.
///
/// Returns `None` when the cluster is too large to be worth compressing.
pub(crate) fn refine_cluster(
    mat: &CMat,
    approx: &[Complex64],
    isolation: f64,
) -> Option<Vec<Complex64>> {
    let m = approx.len();
    let n = mat.n;
    if !(2..=6).contains(&m) || n < 2 * m || !isolation.is_finite() {
        return None;
    }
    let mean = approx.iter().sum::<Complex64>() / m as f64;
    let radius = approx
        .iter()
        .map(|l| (l - mean).norm())
        .fold(0.0, f64::max);
    let distance = (isolation / 20.0)
        .max(4.0 * radius)
        .max(1e-12 * (1.0 + mean.norm()));
    if distance >= isolation {
        return None; // cluster not isolated enough to separate
    }
    let shift = mean + distance * Complex64::new(0.6, 0.8);
    let lu = LuDd::factor(n, |i, j| mat.get(i, j), shift);

    // Deterministic starting block.
    let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64).wrapping_mul(0xd1342543de82ef95);
    let mut rand = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
    };
    let mut basis: Vec<Vec<CDd>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| CDd::from_c64(Complex64::new(rand(), rand())))
                .collect()
        })
        .collect();

    for _ in 0..24 {
        for column in basis.iter_mut() {
            lu.solve(column);
        }
        orthonormalize(&mut basis);
    }

    // Compressed block B = V^H (A V).
    let mut compressed = vec![CDd::ZERO; m * m];
    for (j, column) in basis.iter().enumerate() {
        let mut image = vec![CDd::ZERO; n];
        for r in 0..n {
            let mut acc = CDd::ZERO;
            for c in 0..n {
                let a = mat.get(r, c);
                if a.re != 0.0 || a.im != 0.0 {
                    acc = acc.add(CDd::from_c64(a).mul(column[c]));
                }
            }
            image[r] = acc;
        }
        for (i, other) in basis.iter().enumerate() {
            let mut acc = CDd::ZERO;
            for r in 0..n {
                acc = acc.add(other[r].conj().mul(image[r]));
            }
            compressed[i * m + j] = acc;
        }
    }

    Some(small_eigenvalues(&compressed, m))
}

fn orthonormalize(basis: &mut [Vec<CDd>]) {
    let m = basis.len();
    let n = basis[0].len();
    for j in 0..m {
        for i in 0..j {
            let mut proj = CDd::ZERO;
            for r in 0..n {
                proj = proj.add(basis[i][r].conj().mul(basis[j][r]));
            }
            for r in 0..n {
                let delta = proj.mul(basis[i][r]);
                basis[j][r] = basis[j][r].sub(delta);
            }
        }
        let mut norm_sq = Dd::ZERO;
        for r in 0..n {
            let z = basis[j][r];
            norm_sq = norm_sq.add(z.re.mul(z.re)).add(z.im.mul(z.im));
        }
        // One Newton step refines the f64 square root to double-double.
        let s0 = norm_sq.hi.sqrt().max(f64::MIN_POSITIVE);
        let s = Dd::from_f64(s0)
            .add(norm_sq.div(Dd::from_f64(s0)))
            .mul(Dd::from_f64(0.5));
        let inv = Dd::from_f64(1.0).div(s);
        for r in 0..n {
            basis[j][r] = basis[j][r].scale(inv);
        }
    }
}

/// Eigenvalues of an m x m double-double matrix (m ≤ 6): characteristic
/// polynomial by Faddeev–LeVerrier, roots by Durand–Kerner.
///
/// The matrix is first centered by its trace mean. For a tight cluster
/// this is essential: a root of multiplicity `m` responds to coefficient
/// noise like its m-th root, so the polynomial must be formed from the
/// (tiny) deviations, whose coefficients are accurate at their own
/// scale, not from the absolute entries.
fn small_eigenvalues(b: &[CDd], m: usize) -> Vec<Complex64> {
    let inv_m = Dd::from_f64(1.0 / m as f64);
    let mut mean = CDd::ZERO;
    for i in 0..m {
        mean = mean.add(b[i * m + i]);
    }
    mean = mean.scale(inv_m);
    let mut centered = b.to_vec();
    for i in 0..m {
        centered[i * m + i] = centered[i * m + i].sub(mean);
    }

    // p(λ) = λ^m + c_1 λ^{m-1} + ... + c_m for the centered matrix.
    let mut coeffs = vec![CDd::ZERO; m + 1];
    coeffs[0] = CDd::from_c64(Complex64::new(1.0, 0.0));
    let mut work = centered.clone();
    for k in 1..=m {
        let mut trace = CDd::ZERO;
        for i in 0..m {
            trace = trace.add(work[i * m + i]);
        }
        let ck = trace.scale(Dd::from_f64(-1.0 / k as f64));
        coeffs[k] = ck;
        if k == m {
            break;
        }
        // work <- C (work + ck I)
        let mut shifted = work.clone();
        for i in 0..m {
            shifted[i * m + i] = shifted[i * m + i].add(ck);
        }
        let mut next = vec![CDd::ZERO; m * m];
        for i in 0..m {
            for j in 0..m {
                let mut acc = CDd::ZERO;
                for t in 0..m {
                    acc = acc.add(centered[i * m + t].mul(shifted[t * m + j]));
                }
                next[i * m + j] = acc;
            }
        }
        work = next;
    }

    let eval = |x: CDd| -> CDd {
        let mut acc = coeffs[0];
        for c in coeffs.iter().skip(1) {
            acc = acc.mul(x).add(*c);
        }
        acc
    };

    // Durand–Kerner from a circle at the natural root scale.
    let bound = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.to_c64().norm().powf(1.0 / k as f64))
        .fold(f64::MIN_POSITIVE, f64::max)
        * 2.0;
    let mut roots: Vec<CDd> = (0..m)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / m as f64;
            CDd::from_c64(Complex64::new(bound * angle.cos(), bound * angle.sin()))
        })
        .collect();
    for _ in 0..800 {
        let mut advance = 0.0_f64;
        for i in 0..m {
            let mut denom = CDd::from_c64(Complex64::new(1.0, 0.0));
            for j in 0..m {
                if i != j {
                    denom = denom.mul(roots[i].sub(roots[j]));
                }
            }
            if denom.mag() == 0.0 {
                continue;
            }
            let step = eval(roots[i]).div(denom);
            roots[i] = roots[i].sub(step);
            advance = advance.max(step.mag());
        }
        if advance < 1e-31 * bound {
            break;
        }
    }
    roots
        .into_iter()
        .map(|r| r.add(mean).to_c64())
        .collect()
}
