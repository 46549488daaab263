//! The integrals
//!
//! ```text
//! J(x)      = ∫₀¹ log(1 + t^x)/(1 + t) dt
//! J_{k,N}(x) = ∫₀¹ K_{k,N}(u) ₙLi_k(−u^x) du,
//! K_{k,N}(u) = 2^{k−1}/(u − 1) − 2^N u^{2^N−1}/(u^{2^N} − 1) − (2^{k−1} − 1)/(u log u)
//! ```
//!
//! and their relations to 𝓕_{k,N}. The three poles of K at u = 1 cancel; close
//! to 1 the kernel is evaluated from its Taylor series in h = u − 1.

use super::{integrate_01, integrate_breaks, EndpointPolicy, QuadResult, MAX_PANELS};
use crate::error::{domain, Result};
use crate::herglotz::{ext_f_at, higher_f_k};
use crate::identities::{IdentityReport, Val, DEFAULT_TOLERANCE};
use crate::params;
use crate::special::{lattice_exp, zeta_any, zeta_deriv_any, EULER_GAMMA};
use num_complex::Complex64;

/// Numerical settings for the J-integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JConfig {
    /// |u − 1| below which the kernel switches to its Taylor series.
    pub delta: f64,
    /// Number of Taylor terms.
    pub taylor_order: usize,
    /// Absolute quadrature tolerance.
    pub tol: f64,
}

impl Default for JConfig {
    fn default() -> Self {
        Self { delta: 1e-3, taylor_order: 8, tol: 1e-12 }
    }
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("J needs x > 0, got {x}"));
    }
    Ok(())
}

/// J(x) = ∫₀¹ log(1 + t^x)/(1 + t) dt for x > 0.
pub fn j_integral(x: f64) -> Result<QuadResult> {
    check_x(x)?;
    integrate_01(|t: f64| Ok(Complex64::new(t.powf(x).ln_1p() / (1.0 + t), 0.0)), 1e-14, EndpointPolicy::LogSub0)
}

fn power_series_div(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut q = vec![0.0; num.len()];
    for i in 0..num.len() {
        let mut s = num[i];
        for j in 1..=i.min(den.len() - 1) {
            s -= den[j] * q[i - j];
        }
        q[i] = s / den[0];
    }
    q
}

/// Taylor coefficients c_0, c_1, … of K_{k,N}(1 + h) = Σ c_i h^i.
fn kernel_taylor(k: u32, big_n: u32, order: usize) -> Vec<f64> {
    let len = order + 2;
    let big_m = 2f64.powi(big_n as i32);
    let binom = |n: f64, i: usize| (0..i).fold(1.0, |acc, j| acc * (n - j as f64) / (j as f64 + 1.0));
    // M(1+h)^{M−1}/((1+h)^M − 1) = (1/h) · num/den
    let num: Vec<f64> = (0..len).map(|i| binom(big_m - 1.0, i)).collect();
    let den: Vec<f64> = (0..len).map(|i| binom(big_m, i + 1) / big_m).collect();
    let q = power_series_div(&num, &den);
    // 1/(u log u) = (1/h) / e(h), e(h) = (1+h) log(1+h)/h
    let lg: Vec<f64> = (0..len).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 } / (i as f64 + 1.0)).collect();
    let e: Vec<f64> = (0..len).map(|i| lg[i] + if i > 0 { lg[i - 1] } else { 0.0 }).collect();
    let mut one = vec![0.0; len];
    one[0] = 1.0;
    let inv_e = power_series_div(&one, &e);
    let a = 2f64.powi(k as i32 - 1);
    let combined: Vec<f64> = (0..len).map(|i| a * one[i] - q[i] - (a - 1.0) * inv_e[i]).collect();
    combined[1..].to_vec()
}

/// u · K_{k,N}(u) at u = e^{−v}, v ≥ 0.
fn scaled_kernel(k: u32, big_n: u32, v: f64, taylor: &[f64], delta: f64) -> f64 {
    let h = (-v).exp_m1();
    if h.abs() < delta {
        let kv = taylor.iter().rev().fold(0.0, |acc, c| acc * h + c);
        return (1.0 + h) * kv;
    }
    let a = 2f64.powi(k as i32 - 1);
    let big_m = 2f64.powi(big_n as i32);
    let um = (-big_m * v).exp();
    a * (-v).exp() / h - big_m * um / (-big_m * v).exp_m1() + (a - 1.0) / v
}

/// K_{k,N}(u) for 0 < u < 1.
pub fn j_kn_kernel(k: u32, big_n: u32, u: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return domain(format!("kernel argument must lie in (0, 1), got {u}"));
    }
    let cfg = JConfig::default();
    let taylor = kernel_taylor(k, big_n, cfg.taylor_order);
    Ok(scaled_kernel(k, big_n, -u.ln(), &taylor, cfg.delta) / u)
}

/// ₙLi_k(−e^{−y}) = 2^{1−k} Λ(2^N y) − Λ(y), Λ(y) = Σ n^{−k} e^{−n^N y}.
fn gen_polylog_neg(k: u32, big_n: u32, y: f64) -> Result<f64> {
    let kf = k as f64;
    if y == 0.0 {
        return Ok(if k == 1 { -std::f64::consts::LN_2 } else { (2f64.powf(1.0 - kf) - 1.0) * zeta_any(kf) });
    }
    let nf = big_n as f64;
    let (even, _) = lattice_exp(kf, nf, Complex64::new(2f64.powf(nf) * y, 0.0))?;
    let (all, _) = lattice_exp(kf, nf, Complex64::new(y, 0.0))?;
    Ok(2f64.powf(1.0 - kf) * even.re - all.re)
}

/// J_{k,N}(x) with the given settings. The integral is taken in v = −log u,
/// mapped to s = v/(1 + v) ∈ [0, 1).
pub fn j_kn_with(k: u32, big_n: u32, x: f64, cfg: JConfig) -> Result<QuadResult> {
    check_x(x)?;
    if k == 0 || big_n == 0 {
        return domain(format!("J_kN needs positive integers k and N, got k = {k}, N = {big_n}"));
    }
    let taylor = kernel_taylor(k, big_n, cfg.taylor_order);
    let f = |s: f64| -> Result<Complex64> {
        if s >= 1.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let v = s / (1.0 - s);
        let li = gen_polylog_neg(k, big_n, x * v)?;
        let w = scaled_kernel(k, big_n, v, &taylor, cfg.delta);
        Ok(Complex64::new(w * li / ((1.0 - s) * (1.0 - s)), 0.0))
    };
    let vd = -(-cfg.delta).ln_1p();
    let sd = vd / (1.0 + vd);
    integrate_breaks(f, &[0.0, sd, 0.25, 0.5, 0.75, 1.0], cfg.tol, MAX_PANELS)
}

/// J_{k,N}(x) with default settings.
pub fn j_kn(k: u32, big_n: u32, x: f64) -> Result<QuadResult> {
    j_kn_with(k, big_n, x, JConfig::default())
}

fn quad_val(q: QuadResult) -> Val {
    Val { v: q.value, e: q.abs_err, terms: q.panels as u64 }
}

fn ff(k: u32, big_n: u32, x: f64) -> Result<Val> {
    Ok(ext_f_at(k as f64, big_n as f64, Complex64::new(x, 0.0))?.into())
}

/// J_{k,N}(x) = 𝓕(2^N x) − (2^{k−1} + 2^{1−k})𝓕(x) + 𝓕(x/2^N) + (2^N + 2^{−N} − 2^{k−1} − 2^{1−k}) ζ(k+N)/x
/// with 𝓕 = 𝓕_{k,N}.
pub fn check_thm28(k: u32, big_n: u32, x: f64) -> Result<IdentityReport> {
    let lhs = quad_val(j_kn(k, big_n, x)?);
    let p = 2f64.powi(big_n as i32);
    let c = 2f64.powi(k as i32 - 1) + 2f64.powi(1 - k as i32);
    let rhs = ff(k, big_n, p * x)? - ff(k, big_n, x)? * c
        + ff(k, big_n, x / p)?
        + Val::real((p + 1.0 / p - c) * zeta_any((k + big_n) as f64) / x);
    Ok(IdentityReport::new("thm28", params!("k" => k, "N" => big_n, "x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

fn fk(k: u32, x: f64) -> Result<Val> {
    Ok(higher_f_k(k, Complex64::new(x, 0.0))?.into())
}

/// The N = 1 case written with F_k(x) = Σ ψ(nx)/n^k, k ≥ 2.
pub fn check_cor29(k: u32, x: f64) -> Result<IdentityReport> {
    if k < 2 {
        return domain(format!("needs k ≥ 2, got {k}"));
    }
    let lhs = quad_val(j_kn(k, 1, x)?);
    let kf = k as f64;
    let c = 2f64.powi(k as i32 - 1) + 2f64.powi(1 - k as i32);
    let z1 = zeta_any(kf + 1.0);
    let tail = (2.0 - c) * (zeta_deriv_any(kf) - zeta_any(kf) * x.ln() + z1 / x) + z1 / (2.0 * x);
    let rhs = fk(k, 2.0 * x)? - fk(k, x)? * c + fk(k, x / 2.0)? + Val::real(tail);
    Ok(IdentityReport::new("cor29", params!("k" => k, "x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

/// The x = 1 case for odd k ≥ 3, with F_k(1) and F_k(½) eliminated in favour of F_k(2).
pub fn check_cor210(k: u32) -> Result<IdentityReport> {
    if k < 3 || k % 2 == 0 {
        return domain(format!("needs odd k ≥ 3, got {k}"));
    }
    let lhs = quad_val(j_kn(k, 1, 1.0)?);
    let kf = k as f64;
    let p = |e: f64| 2f64.powf(e);
    let mut s = (p(kf - 1.0) - 1.0) * EULER_GAMMA * zeta_any(kf)
        + (0.5 - p(-kf)) * zeta_any(kf + 1.0)
        + (2.0 - p(kf - 1.0) - p(1.0 - kf)) * zeta_deriv_any(kf);
    for r in 2..k {
        let rf = r as f64;
        let sign = if r % 2 == 0 { -1.0 } else { 1.0 };
        s += sign * (p(kf - 2.0) + p(-kf) - p(rf - kf)) * zeta_any(rf) * zeta_any(kf + 1.0 - rf);
    }
    let rhs = fk(k, 2.0)? * (1.0 - p(1.0 - kf)) + Val::real(s);
    Ok(IdentityReport::new("cor210", params!("k" => k), lhs, rhs, DEFAULT_TOLERANCE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn j_closed_forms() {
        let j1 = j_integral(1.0).unwrap();
        assert!((j1.value.re - 0.5 * LN_2 * LN_2).abs() < 1e-14);
        let phi = (5f64.sqrt() + 1.0) / 2.0;
        let want = 11.0 * PI * PI / 240.0 + 0.75 * LN_2 * LN_2 - 2.0 * phi.ln().powi(2);
        assert!((j_integral(0.4).unwrap().value.re - want).abs() < 1e-13);
        let x = 4.0 + 17f64.sqrt();
        let want = -PI * PI / 6.0 + 0.5 * LN_2 * LN_2 + LN_2 * x.ln();
        assert!((j_integral(x).unwrap().value.re - want).abs() < 1e-13);
    }

    #[test]
    fn kernel_is_regular_at_one() {
        for (k, n) in [(1, 1), (2, 1), (3, 2), (2, 3)] {
            let taylor = kernel_taylor(k, n, 8);
            for h in [-2e-3, -5e-3, -2e-2] {
                let v = -(1.0f64 + h).ln();
                let direct = scaled_kernel(k, n, v, &taylor, 0.0) / (1.0 + h);
                let series = taylor.iter().rev().fold(0.0, |acc, c| acc * h + c);
                assert!((direct - series).abs() < 1e-9 * series.abs().max(1.0), "k={k} N={n} h={h}: {direct} vs {series}");
            }
            let near: f64 = (1..100).map(|i| j_kn_kernel(k, n, 1.0 - i as f64 * 1e-6).unwrap().abs()).fold(0.0, f64::max);
            assert!(near.is_finite() && near < 10.0 * taylor[0].abs().max(1.0));
        }
    }

    #[test]
    fn j11_is_j() {
        let a = j_kn(1, 1, 2.0).unwrap();
        let b = j_integral(2.0).unwrap();
        assert!((a.value - b.value).norm() < 1e-12);
        let narrow = j_kn_with(2, 1, 1.0, JConfig { delta: 1e-6, ..JConfig::default() }).unwrap();
        let wide = j_kn(2, 1, 1.0).unwrap();
        assert!((narrow.value - wide.value).norm() < 1e-9);
    }

    #[test]
    fn relations() {
        for (k, n, x, bound) in [(1, 1, 1.3, 1e-9), (2, 1, 2.0, 1e-9), (2, 3, 0.7, 1e-8), (2, 3, 1.0, 1e-8)] {
            let r = check_thm28(k, n, x).unwrap();
            assert!(r.pass && r.abs_residual < bound, "{r:?}");
        }
        let r = check_cor29(3, 1.0).unwrap();
        assert!(r.pass && r.abs_residual < 1e-9, "{r:?}");
        for (k, bound) in [(3, 1e-9), (5, 1e-8)] {
            let r = check_cor210(k).unwrap();
            assert!(r.pass && r.abs_residual < bound, "{r:?}");
        }
    }
}
