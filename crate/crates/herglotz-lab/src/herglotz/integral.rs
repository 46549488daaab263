//! Two integral representations of 𝓕_{k,N}, used as independent oracles:
//!
//! ```text
//! 𝓕_{k,N}(x) = −∫₀^∞ (1/(1−e^{−t}) − 1/t) ₙLi_k(e^{−xt}) dt
//! 𝓕_{k,N}(x) = −∫₀^∞ L_{k,N}(t) 2t/(t²+x²) dt − ζ(k+N)/(2x)
//! ```
//!
//! with L_{k,N}(t) = Σ n^{−k}/(e^{2π n^N t} − 1). Both are integrated in
//! v = log t between bounds chosen from the behaviour at the two ends.

use super::{EvalOutcome, HerglotzParams, Method};
use crate::error::{domain, Result};
use crate::lambert::lambert_kernel;
use crate::quadrature::{integrate_breaks, MAX_PANELS};
use crate::special::{gamma, lattice_exp, zeta_any};
use num_complex::Complex64;
use std::f64::consts::PI;

/// 1/(1 − e^{−t}) − 1/t, with its Taylor series near 0.
fn digamma_kernel(t: f64) -> f64 {
    if t < 1e-3 {
        let t2 = t * t;
        0.5 + t / 12.0 - t * t2 / 720.0
    } else {
        -1.0 / (-t).exp_m1() - 1.0 / t
    }
}

fn check_right_half_plane(x: Complex64) -> Result<()> {
    if !(x.re > 0.0) || !x.im.is_finite() {
        return domain(format!("integral representation needs Re x > 0, got {x}"));
    }
    Ok(())
}

/// Lower cut t₀ with ∫₀^{t₀} C t^e (1 + |log t|) dt below `target`.
fn lower_cut(c: f64, e: f64, target: f64) -> f64 {
    let mut t = (target * e / c.max(1e-300)).powf(1.0 / e);
    for _ in 0..3 {
        let f = 2.0 + t.ln().abs();
        t = (target * e / (c.max(1e-300) * f)).powf(1.0 / e);
    }
    t.clamp(1e-300, 1e-2)
}

fn breaks(lo: f64, hi: f64) -> Vec<f64> {
    let pieces = ((hi - lo) / 2.0).ceil().max(1.0) as usize;
    (0..=pieces).map(|i| lo + (hi - lo) * i as f64 / pieces as f64).collect()
}

/// 𝓕_{k,N}(x) from the digamma-kernel integral over the exponential lattice sum.
pub fn ext_f_via_integral(p: HerglotzParams, x: Complex64, tol: f64) -> Result<EvalOutcome> {
    check_right_half_plane(x)?;
    let (k, n) = (p.k, p.big_n);
    let tol = tol.max(1e-15);
    // upper end: |Λ(xt)| ≤ ζ-weighted e^{−Re(x) t}
    let hi_t = ((1.0 / tol).ln() + (1.0 + 1.0 / x.re).ln() + 5.0) / x.re;
    // lower end: Λ(y) ~ Γ((1−k)/N)/N · y^{(k−1)/N} + ζ(k)
    let e = ((k - 1.0) / n + 1.0).min(1.0);
    let lead = if (k - 1.0).abs() < 1e-12 { 1.0 } else { gamma((1.0 - k) / n).abs() / n * x.norm().powf((k - 1.0) / n) };
    let c = 0.5 * (lead + zeta_any(k.max(1.5)).abs() + 1.0);
    let lo_t = lower_cut(c, e, 1e-3 * tol);
    let f = |v: f64| -> Result<Complex64> {
        let t = v.exp();
        let (lam, _) = lattice_exp(k, n, x * t)?;
        Ok(-digamma_kernel(t) * lam * t)
    };
    let q = integrate_breaks(f, &breaks(lo_t.ln(), hi_t.ln()), 0.1 * tol, MAX_PANELS)?;
    Ok(EvalOutcome {
        value: q.value,
        abs_err: q.abs_err + 2e-3 * tol,
        terms_used: q.panels as u64,
        method: Method::IntegralKernel,
    })
}

/// 𝓕_{k,N}(x) from Binet's formula summed against the Lambert kernel.
pub fn ext_f_via_binet(p: HerglotzParams, x: Complex64, tol: f64) -> Result<EvalOutcome> {
    check_right_half_plane(x)?;
    let (k, n) = (p.k, p.big_n);
    let tol = tol.max(1e-15);
    // upper end: L(t) ≤ ζ(k)-weighted e^{−2πt}, times 2t/|t²+x²| ≤ 2/t for t ≫ |x|
    let hi_t = ((1.0 / tol).ln() + 5.0) / (2.0 * PI) + 1.0;
    // lower end: L(t)·2t/(t²+x²)·t ~ ζ(k+N) t/(π x²) + O(t^{(k−1)/N+2})
    let e = ((k - 1.0) / n + 2.0).min(1.0);
    let x2 = (x * x).norm();
    let c = (zeta_any(k + n) / PI + 1.0) / x2.min(1.0);
    let lo_t = lower_cut(c, e, 1e-3 * tol);
    let f = |v: f64| -> Result<Complex64> {
        let t = v.exp();
        let (l, _) = lambert_kernel(k, n, t)?;
        Ok(-l * 2.0 * t * t / (t * t + x * x))
    };
    let q = integrate_breaks(f, &breaks(lo_t.ln(), hi_t.ln()), 0.1 * tol, MAX_PANELS)?;
    let shift = zeta_any(k + n) / (2.0 * x);
    Ok(EvalOutcome {
        value: q.value - shift,
        abs_err: q.abs_err + 2e-3 * tol + 4.0 * f64::EPSILON * shift.norm(),
        terms_used: q.panels as u64,
        method: Method::BinetLambert,
    })
}
