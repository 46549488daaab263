//! The Herglotz function F, the higher Herglotz function F_k and the extended
//! higher Herglotz function
//!
//! ```text
//! 𝓕_{k,N}(x) = Σ_{n≥1} (ψ(n^N x) − log(n^N x)) / n^k,   k + N > 1, x ∉ (−∞, 0]
//! ```
//!
//! evaluated by a lattice series with a Stirling tail, and independently by two
//! integral representations.

mod integral;
pub mod series;

pub use integral::{ext_f_via_binet, ext_f_via_integral};
pub use series::{LatticeSum, LatticeValue, Weight};

use crate::error::{domain, Result};
use crate::special::{polylog, riemann_zeta_deriv, zeta_any, EULER_GAMMA};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default absolute tolerance for series evaluations.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Parameters (k, N) of 𝓕_{k,N}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HerglotzParams {
    pub k: f64,
    pub big_n: f64,
}

fn is_int(v: f64) -> bool {
    v == v.floor() && v.abs() < 1e15
}

impl HerglotzParams {
    pub fn new(k: f64, big_n: f64) -> Result<Self> {
        if !(k > 0.0 && big_n > 0.0) || !k.is_finite() || !big_n.is_finite() {
            return domain(format!("k and N must be positive reals, got k = {k}, N = {big_n}"));
        }
        if !(k + big_n > 1.0) {
            return domain(format!("k + N must exceed 1, got k = {k}, N = {big_n}"));
        }
        Ok(Self { k, big_n })
    }

    pub fn k_integer(&self) -> bool {
        is_int(self.k)
    }

    pub fn n_integer(&self) -> bool {
        is_int(self.big_n)
    }

    pub fn k_odd(&self) -> bool {
        self.k_integer() && (self.k as i64) % 2 == 1
    }

    pub fn n_odd(&self) -> bool {
        self.n_integer() && (self.big_n as i64) % 2 == 1
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    SeriesTail,
    IntegralKernel,
    BinetLambert,
    Asymptotic,
    DirectSum,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::SeriesTail => "series_tail",
            Method::IntegralKernel => "integral_kernel",
            Method::BinetLambert => "binet_lambert",
            Method::Asymptotic => "asymptotic",
            Method::DirectSum => "direct_sum",
            Method::Quadrature => "quadrature",
        }
    }
}

/// A computed value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: Complex64,
    pub abs_err: f64,
    pub terms_used: u64,
    pub method: Method,
}

pub(crate) fn check_cut(x: Complex64) -> Result<()> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return domain(format!("non-finite argument {x}"));
    }
    if x.im == 0.0 && x.re <= 0.0 {
        return domain(format!("x = {x} lies on the cut (−∞, 0]"));
    }
    Ok(())
}

/// 𝓕_{k,N}(x) by the lattice series.
pub fn ext_f(p: HerglotzParams, x: Complex64, tol: f64) -> Result<EvalOutcome> {
    check_cut(x)?;
    let v = LatticeSum::single(p.k, p.big_n, x).eval(tol)?;
    Ok(EvalOutcome { value: v.value, abs_err: v.abs_err, terms_used: v.terms, method: Method::SeriesTail })
}

/// Shorthand for 𝓕_{k,N}(x) at the default tolerance with real (k, N).
pub fn ext_f_at(k: f64, big_n: f64, x: Complex64) -> Result<EvalOutcome> {
    ext_f(HerglotzParams::new(k, big_n)?, x, DEFAULT_TOL)
}

/// Herglotz function F(x) = 𝓕_{1,1}(x).
pub fn herglotz_f(x: Complex64) -> Result<EvalOutcome> {
    ext_f_at(1.0, 1.0, x)
}

/// Higher Herglotz function F_k(x) = Σ ψ(nx)/n^k for integer k ≥ 2, through
/// F_k(x) = 𝓕_{k,1}(x) − ζ'(k) + ζ(k) log x.
pub fn higher_f_k(k: u32, x: Complex64) -> Result<EvalOutcome> {
    if k < 2 {
        return domain(format!("F_k needs integer k ≥ 2, got {k}"));
    }
    let kf = k as f64;
    let e = ext_f_at(kf, 1.0, x)?;
    let extra = zeta_any(kf) * x.ln() - riemann_zeta_deriv(kf)?;
    Ok(EvalOutcome {
        value: e.value + extra,
        abs_err: e.abs_err + 4.0 * f64::EPSILON * extra.norm(),
        ..e
    })
}

/// Zagier's P(x, y) = F(x) − F(y) + Li₂(y/x) − π²/6 + log(x/y)(γ − ½log(x−y) + ¼log(x/y))
/// for x > y > 0.
pub fn zagier_p(x: f64, y: f64) -> Result<EvalOutcome> {
    if !(y > 0.0 && x > y) || !x.is_finite() {
        return domain(format!("P(x, y) needs x > y > 0, got x = {x}, y = {y}"));
    }
    let fx = herglotz_f(Complex64::new(x, 0.0))?;
    let fy = herglotz_f(Complex64::new(y, 0.0))?;
    let li = polylog(2.0, Complex64::new(y / x, 0.0))?.re;
    let l = (x / y).ln();
    let rest = li - PI * PI / 6.0 + l * (EULER_GAMMA - 0.5 * (x - y).ln() + 0.25 * l);
    let value = fx.value - fy.value + rest;
    Ok(EvalOutcome {
        value: Complex64::new(value.re, 0.0),
        abs_err: fx.abs_err + fy.abs_err + 8.0 * f64::EPSILON * (rest.abs() + 1.0),
        terms_used: fx.terms_used + fy.terms_used,
        method: Method::SeriesTail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::STIELTJES_GAMMA1;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn f_at_one() {
        let g = EULER_GAMMA;
        let expect = -g * g / 2.0 - PI * PI / 12.0 - STIELTJES_GAMMA1;
        let v = herglotz_f(c(1.0, 0.0)).unwrap();
        assert!((v.value.re - expect).abs() < 1e-13, "{} vs {expect}", v.value);
        assert!(v.value.im == 0.0);
    }

    #[test]
    fn params_gate() {
        assert!(HerglotzParams::new(0.5, 0.5).is_err());
        assert!(HerglotzParams::new(-1.0, 3.0).is_err());
        let p = HerglotzParams::new(3.0, 5.0).unwrap();
        assert!(p.k_odd() && p.n_odd() && p.k_integer());
        assert!(!HerglotzParams::new(2.5, 1.0).unwrap().k_integer());
    }

    #[test]
    fn cut_is_rejected() {
        assert!(herglotz_f(c(-2.0, 0.0)).is_err());
        assert!(herglotz_f(c(0.0, 0.0)).is_err());
        assert!(herglotz_f(c(-2.0, 1e-3)).is_ok());
    }

    #[test]
    fn conjugate_symmetry() {
        let p = HerglotzParams::new(2.0, 1.5).unwrap();
        let a = ext_f(p, c(0.4, 1.3), 1e-14).unwrap().value;
        let b = ext_f(p, c(0.4, -1.3), 1e-14).unwrap().value;
        assert!((a - b.conj()).norm() < 1e-14);
    }

    #[test]
    fn f_at_two_point_three_against_raw_sum() {
        // 10⁶ raw terms plus the integral-test bracket of the remainder
        let x = 2.3;
        let raw: f64 = (1..=1_000_000u64)
            .map(|n| {
                let z = c(n as f64 * x, 0.0);
                psi_minus_log_re(z) / n as f64
            })
            .sum();
        // remainder Σ_{n>M} g(nx)/n with g(z) ≈ −1/(2z): between the integrals from M and M+1
        let m = 1e6;
        let (lo, hi) = (-1.0 / (2.0 * x * m), -1.0 / (2.0 * x * (m + 1.0)));
        let v = herglotz_f(c(x, 0.0)).unwrap().value.re;
        assert!(v >= raw + lo - 1e-12 && v <= raw + hi + 1e-12, "{v} vs [{}, {}]", raw + lo, raw + hi);
    }

    fn psi_minus_log_re(z: Complex64) -> f64 {
        crate::special::psi_minus_log(z).unwrap().re
    }

    #[test]
    fn tighter_tolerance_never_loosens_the_estimate() {
        let p = HerglotzParams::new(1.5, 2.0).unwrap();
        let x = c(0.3, 0.2);
        let mut last = f64::INFINITY;
        for tol in [1e-6, 1e-9, 1e-12, 1e-14] {
            let e = ext_f(p, x, tol).unwrap().abs_err;
            assert!(e <= last);
            last = e;
        }
    }

    #[test]
    fn higher_f_decomposition() {
        // 𝓕_{k,N}(x) = Σ ψ(n^N x)/n^k + N ζ'(k) − ζ(k) log x, here with N = 1
        let x = c(2.0, 0.0);
        let fk = higher_f_k(3, x).unwrap().value;
        let e = ext_f_at(3.0, 1.0, x).unwrap().value;
        let d = e - fk - riemann_zeta_deriv(3.0).unwrap() + zeta_any(3.0) * x.ln();
        assert!(d.norm() < 1e-14);
        assert!(higher_f_k(1, x).is_err());
    }

    #[test]
    fn zagier_p_composition() {
        let p = zagier_p(2.0, 1.0).unwrap();
        let f2 = herglotz_f(c(2.0, 0.0)).unwrap().value.re;
        let f1 = herglotz_f(c(1.0, 0.0)).unwrap().value.re;
        let l2 = 2f64.ln();
        let li = PI * PI / 12.0 - 0.5 * l2 * l2;
        let expect = f2 - f1 + li - PI * PI / 6.0 + l2 * (EULER_GAMMA + 0.25 * l2);
        assert!((p.value.re - expect).abs() < 1e-14);
        assert!(zagier_p(1.0, 1.0).is_err());
        assert!(zagier_p(1.0, -1.0).is_err());
    }
}
