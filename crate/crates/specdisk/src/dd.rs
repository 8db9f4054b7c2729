//! Minimal double-double arithmetic and a complex dense solver on top of
//! it.
//!
//! Backward-stable double-precision eigensolvers perturb a matrix by
//! ~eps·‖H‖, which splits a defective eigenvalue cluster by the square
//! root of that; for the badly scaled Hill matrices this caps cluster
//! accuracy near 1e-6. The routines here re-solve only the small
//! invariant subspace of such a cluster in ~31-digit arithmetic, where
//! the same square-root law lands near 1e-13. Error-free transformations
//! (`two_sum`, `two_prod` via FMA) are the standard Dekker/Knuth kernels.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    // Requires |a| >= |b|.
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    Dd {
        hi: s,
        lo: (a - (s - v)) + (b - v),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: a.mul_add(b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let mut lo = s.lo + t.hi;
        let r = quick_two_sum(s.hi, lo);
        lo = t.lo + r.lo;
        quick_two_sum(r.hi, lo)
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + self.hi * other.lo + self.lo * other.hi;
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul(Dd::from_f64(q1)));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul(Dd::from_f64(q2)));
        let q3 = r2.hi / other.hi;
        quick_two_sum(q1, q2).add(Dd::from_f64(q3))
    }

}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub const ZERO: CDd = CDd { re: Dd::ZERO, im: Dd::ZERO };

    #[inline]
    pub fn from_c64(z: Complex64) -> CDd {
        CDd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: CDd) -> CDd {
        CDd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn sub(self, o: CDd) -> CDd {
        CDd { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn conj(self) -> CDd {
        CDd { re: self.re, im: self.im.neg() }
    }

    #[inline]
    pub fn div(self, o: CDd) -> CDd {
        let denom = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(o.conj());
        CDd { re: num.re.div(denom), im: num.im.div(denom) }
    }

    /// Approximate magnitude for pivoting decisions.
    #[inline]
    pub fn mag(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    #[inline]
    pub fn scale(self, s: Dd) -> CDd {
        CDd { re: self.re.mul(s), im: self.im.mul(s) }
    }
}

/// Dense LU factorization with partial pivoting over `CDd`.
pub(crate) struct LuDd {
    n: usize,
    lu: Vec<CDd>,
    pivots: Vec<usize>,
}

impl LuDd {
    /// Factorizes `A - shift I` where `A` is given by exact f64 entries.
    pub fn factor(n: usize, entry: impl Fn(usize, usize) -> Complex64, shift: Complex64) -> LuDd {
        let mut lu = vec![CDd::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut v = CDd::from_c64(entry(i, j));
                if i == j {
                    v = v.sub(CDd::from_c64(shift));
                }
                lu[i * n + j] = v;
            }
        }
        let mut pivots = Vec::with_capacity(n);
        for col in 0..n {
            let (pivot_row, _) = (col..n)
                .map(|r| (r, lu[r * n + col].mag()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            pivots.push(pivot_row);
            if pivot_row != col {
                for j in 0..n {
                    lu.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pivot = lu[col * n + col];
            if pivot.mag() == 0.0 {
                continue; // singular column; solves will rely on the rest
            }
            for r in col + 1..n {
                let factor = lu[r * n + col].div(pivot);
                lu[r * n + col] = factor;
                for j in col + 1..n {
                    let delta = factor.mul(lu[col * n + j]);
                    lu[r * n + j] = lu[r * n + j].sub(delta);
                }
            }
        }
        LuDd { n, lu, pivots }
    }

    /// Solves `(A - shift I) x = b` in place.
    pub fn solve(&self, b: &mut [CDd]) {
        let n = self.n;
        // The factorization swaps whole rows (L factors included), so all
        // interchanges apply to the right-hand side before substitution.
        for col in 0..n {
            let p = self.pivots[col];
            if p != col {
                b.swap(col, p);
            }
        }
        for col in 0..n {
            for r in col + 1..n {
                let delta = self.lu[r * n + col].mul(b[col]);
                b[r] = b[r].sub(delta);
            }
        }
        for col in (0..n).rev() {
            let pivot = self.lu[col * n + col];
            if pivot.mag() == 0.0 {
                b[col] = CDd::ZERO;
                continue;
            }
            b[col] = b[col].div(pivot);
            for r in 0..col {
                let delta = self.lu[r * n + col].mul(b[col]);
                b[r] = b[r].sub(delta);
            }
        }
    }
}
