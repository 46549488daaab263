//! Polylogarithm Li_s(t), the generalized polylogarithm ₙLi_s(t) = Σ t^{n^N}/n^s,
//! and the exponential lattice sum Λ_{k,N}(y) = Σ n^{−k} e^{−n^N y} behind both.

use super::gamma::{factorial, gamma};
use super::mellin::lattice_exp_small;
use super::zeta::zeta_any;
use crate::error::{HerglotzError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Terms allowed in a direct lattice sum before giving up.
const DIRECT_BUDGET: usize = 20_000_000;

/// Λ_{k,N}(y) by direct summation; `None` if it would exceed the budget.
fn lattice_direct(k: f64, n: f64, y: Complex64, budget: usize) -> Option<(Complex64, f64)> {
    let re = y.re;
    if re <= 0.0 {
        return None;
    }
    let need = (45.0 / re).powf(1.0 / n);
    if need > budget as f64 {
        return None;
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut m = 1usize;
    loop {
        let mf = m as f64;
        let e = mf.powf(n);
        let t = mf.powf(-k) * (-e * y).exp();
        // Neumaier summation
        let s = sum + t;
        if sum.re.abs() >= t.re.abs() {
            comp.re += (sum.re - s.re) + t.re;
        } else {
            comp.re += (t.re - s.re) + sum.re;
        }
        if sum.im.abs() >= t.im.abs() {
            comp.im += (sum.im - s.im) + t.im;
        } else {
            comp.im += (t.im - s.im) + sum.im;
        }
        sum = s;
        let mag = t.norm();
        if e * re > 1.0 && mag <= 1e-18 * sum.norm() {
            break;
        }
        if e * re > 745.0 || m >= budget {
            break;
        }
        m += 1;
    }
    Some((sum + comp, 4.0 * f64::EPSILON * sum.norm()))
}

/// Λ_{k,N}(y) = Σ_{n≥1} n^{−k} e^{−n^N y} for Re y > 0, choosing between direct
/// summation and the small-y Mellin expansion. Returns value and error estimate.
pub(crate) fn lattice_exp(k: f64, n: f64, y: Complex64) -> Result<(Complex64, f64)> {
    if !(y.re > 0.0) {
        return Err(HerglotzError::Domain(format!("lattice sum needs Re y > 0, got {y}")));
    }
    let need = (45.0 / y.re).powf(1.0 / n);
    if need <= 2_000.0 {
        if let Some(r) = lattice_direct(k, n, y, DIRECT_BUDGET) {
            return Ok(r);
        }
    }
    // exponentially small corrections neglected by the expansion stay below
    // 1e-17 inside these radii
    let radius = if n <= 1.0 { 2.0 } else if n < 2.5 { 0.25 } else { 0.02 };
    if y.norm() <= radius && y.arg().abs() < 0.45 * PI {
        if let Some(e) = lattice_exp_small(k, n, y) {
            if e.err <= 1e-13 * e.value.norm().max(1.0) {
                return Ok((e.value, e.err));
            }
        }
    }
    lattice_direct(k, n, y, DIRECT_BUDGET).ok_or_else(|| {
        HerglotzError::NonConvergence(format!("lattice sum k={k} N={n} y={y} needs too many terms"))
    })
}

/// Polylogarithm Li_s(t) = Σ t^n / n^s for real s and |t| ≤ 1.
///
/// Small |t| uses the defining series; otherwise the expansion in μ = log t
///
/// ```text
/// Li_s(e^μ) = Γ(1−s)(−μ)^{s−1} + Σ_k ζ(s−k) μ^k / k!                     (s ∉ ℕ)
/// Li_n(e^μ) = μ^{n−1}/(n−1)! (H_{n−1} − log(−μ)) + Σ_{k≠n−1} ζ(n−k) μ^k/k!
/// ```
///
/// which converges for |μ| < 2π, covering the closed unit disc away from 0.
pub fn polylog(s: f64, t: Complex64) -> Result<Complex64> {
    check_polylog_domain(s, t)?;
    if t.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if t == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(zeta_any(s), 0.0));
    }
    if t.norm() <= 0.5 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut p = t;
        for n in 1..200 {
            let term = p / (n as f64).powf(s);
            sum += term;
            if term.norm() <= 1e-18 * sum.norm() {
                break;
            }
            p *= t;
        }
        return Ok(sum);
    }
    let mu = t.ln();
    let is_pos_int = s >= 1.0 && s == s.floor();
    let mut sum = if is_pos_int {
        let n = s as usize;
        let h: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
        mu.powi(n as i32 - 1) / factorial(n - 1) * (h - (-mu).ln())
    } else {
        gamma(1.0 - s) * (-mu).powf(s - 1.0)
    };
    let mut mupow = Complex64::new(1.0, 0.0);
    let mut small = 0;
    for k in 0..200usize {
        if !(is_pos_int && k + 1 == s as usize) {
            let term = zeta_any(s - k as f64) / factorial(k) * mupow;
            sum += term;
            if term.norm() <= 1e-18 * sum.norm().max(1e-300) {
                small += 1;
                if small >= 3 {
                    break;
                }
            } else {
                small = 0;
            }
        }
        mupow *= mu;
    }
    Ok(sum)
}

fn check_polylog_domain(s: f64, t: Complex64) -> Result<()> {
    let r = t.norm();
    if !r.is_finite() || !s.is_finite() {
        return Err(HerglotzError::Domain("non-finite polylog argument".into()));
    }
    if r > 1.0 + 1e-15 {
        return Err(HerglotzError::Divergent(format!("|t| = {r} > 1")));
    }
    if r >= 1.0 - 1e-15 {
        let minus_one = (t + 1.0).norm() < 1e-15;
        if !(s > 1.0 || (minus_one && s > 0.0)) {
            return Err(HerglotzError::Divergent(format!("|t| = 1 needs s > 1 (or t = −1, s > 0), got s = {s}, t = {t}")));
        }
    }
    Ok(())
}

/// Generalized polylogarithm ₙLi_s(t) = Σ_{n≥1} t^{n^N} / n^s.
pub fn gen_polylog(big_n: u32, s: f64, t: Complex64) -> Result<Complex64> {
    if big_n == 0 {
        return Err(HerglotzError::Domain("N must be ≥ 1".into()));
    }
    check_polylog_domain(s, t)?;
    if big_n == 1 {
        return polylog(s, t);
    }
    if t.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    // (−1)^{n^N} = (−1)^n
    if (t + 1.0).norm() < 1e-15 {
        return Ok(Complex64::new((2f64.powf(1.0 - s) - 1.0) * zeta_any(s), 0.0));
    }
    if t == Complex64::new(1.0, 0.0) {
        return Ok(Complex64::new(zeta_any(s), 0.0));
    }
    if t.im == 0.0 && t.re < 0.0 {
        // ₙLi_s(−e^{−y}) = 2^{1−s} Λ(2^N y) − Λ(y), both with real positive argument
        let y = -(-t.re).ln();
        let nf = big_n as f64;
        let (even, _) = lattice_exp(s, nf, Complex64::new(2f64.powf(nf) * y, 0.0))?;
        let (all, _) = lattice_exp(s, nf, Complex64::new(y, 0.0))?;
        return Ok(2f64.powf(1.0 - s) * even - all);
    }
    let y = -t.ln();
    if y.re > 1e-15 {
        // t^{n^N} = e^{−n^N y} for every branch of log t because n^N is an integer
        return Ok(lattice_exp(s, big_n as f64, y)?.0);
    }
    // remaining case: |t| = 1, t ≠ ±1, s > 1; sum directly with a ζ-tail bound
    let mut m_max = 1000u64;
    while super::zeta::zeta_tail(s, m_max) > 1e-12 {
        m_max *= 2;
        if m_max > 4_000_000 {
            return Err(HerglotzError::NonConvergence(format!("unimodular t with s = {s} converges too slowly")));
        }
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        let e = m.checked_pow(big_n).ok_or_else(|| HerglotzError::NonConvergence("exponent overflow".into()))?;
        sum += pow_u64(t, e) * (m as f64).powf(-s);
    }
    Ok(sum)
}

fn pow_u64(mut base: Complex64, mut e: u64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}
