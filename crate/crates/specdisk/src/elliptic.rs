//! Jacobi elliptic functions and complete elliptic integrals.
//!
//! Both integrals use the arithmetic–geometric mean, which converges
//! quadratically; `cn` is evaluated by the descending Landen (Gauss)
//! transformation of the amplitude, A&S 16.4. Parameter convention is
//! `m = k²` throughout.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const MAX_ITER: usize = 40;
const EPSILON: f64 = 1e-15;

fn check_parameter(m: f64) -> Result<()> {
    if !(0.0..1.0).contains(&m) {
        return Err(Error::Domain(format!(
            "elliptic parameter m = {m} outside [0, 1)"
        )));
    }
    Ok(())
}

/// Complete elliptic integral of the first kind,
/// `K(m) = ∫₀^{π/2} dθ / √(1 − m sin²θ)`.
///
/// `K(0) = π/2` and `K(m) → ∞` as `m → 1`; relative accuracy ~1e-15.
pub fn elliptic_k(m: f64) -> Result<f64> {
    check_parameter(m)?;
    let mut a = 1.0_f64;
    let mut b = (1.0 - m).sqrt();
    for _ in 0..MAX_ITER {
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        if (a_next - b_next).abs() < EPSILON * a_next {
            return Ok(PI / (2.0 * a_next));
        }
        a = a_next;
        b = b_next;
    }
    Ok(PI / (2.0 * a))
}

/// Complete elliptic integral of the second kind,
/// `E(m) = ∫₀^{π/2} √(1 − m sin²θ) dθ`.
pub fn elliptic_e(m: f64) -> Result<f64> {
    check_parameter(m)?;
    let mut a = 1.0_f64;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut sum = 0.5 * c * c;
    let mut pow2 = 1.0;
    for _ in 0..MAX_ITER {
        let a_next = 0.5 * (a + b);
        let b_next = (a * b).sqrt();
        c = 0.5 * (a - b);
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
        a = a_next;
        b = b_next;
        if c.abs() < EPSILON * a {
            break;
        }
    }
    Ok(PI / (2.0 * a) * (1.0 - sum))
}

/// Jacobi elliptic `sn`, `cn`, `dn` at real argument `u`.
///
/// The argument is reduced modulo the full period `4K(m)` first; the AGM
/// amplitude descent then delivers ~1e-13 absolute accuracy. `dn` is
/// recovered from the identity `dn² = 1 − m sn²`, which is stable because
/// `dn ≥ √(1−m) > 0` on the real line.
pub fn jacobi_sn_cn_dn(u: f64, m: f64) -> Result<(f64, f64, f64)> {
    check_parameter(m)?;
    if m == 0.0 {
        return Ok((u.sin(), u.cos(), 1.0));
    }

    let quarter = elliptic_k(m)?;
    let period = 4.0 * quarter;
    let u = u - period * (u / period).floor();

    // AGM ladder a_i, c_i.
    let mut a_seq = Vec::with_capacity(MAX_ITER + 1);
    let mut c_seq = Vec::with_capacity(MAX_ITER + 1);
    let mut a = 1.0_f64;
    let mut b = (1.0 - m).sqrt();
    a_seq.push(a);
    c_seq.push(m.sqrt());
    loop {
        let a_next = 0.5 * (a + b);
        let c_next = 0.5 * (a - b);
        b = (a * b).sqrt();
        a = a_next;
        a_seq.push(a);
        c_seq.push(c_next);
        if c_next.abs() < EPSILON * a || a_seq.len() > MAX_ITER {
            break;
        }
    }
    let depth = a_seq.len() - 1;

    // Descend the amplitude: phi_N = 2^N a_N u, then
    // phi_{i-1} = (phi_i + asin(c_i/a_i * sin(phi_i))) / 2.
    let mut phi = (1u64 << depth) as f64 * a_seq[depth] * u;
    for i in (1..=depth).rev() {
        let s = (c_seq[i] / a_seq[i] * phi.sin()).clamp(-1.0, 1.0);
        phi = 0.5 * (phi + s.asin());
    }

    let sn = phi.sin();
    let cn = phi.cos();
    let dn = (1.0 - m * sn * sn).sqrt();
    Ok((sn, cn, dn))
}

/// Jacobi elliptic cosine `cn(u, m)`.
pub fn jacobi_cn(u: f64, m: f64) -> Result<f64> {
    Ok(jacobi_sn_cn_dn(u, m)?.1)
}
