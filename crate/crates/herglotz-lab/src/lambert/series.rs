//! Direct summation of generalized Lambert series with an integral-test tail bound.

use crate::error::{domain, HerglotzError, Result};
use crate::herglotz::{EvalOutcome, Method};
use crate::special::NeumaierC;
use num_complex::Complex64;

const BUDGET: u64 = 50_000_000;

/// Σ_{n≥1} n^p e^{−a(2n)^N α} / (1 − e^{−(2n)^N α}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertSpec {
    pub power: f64,
    pub big_n: u32,
    pub alpha: Complex64,
    pub a: f64,
}

impl LambertSpec {
    pub fn new(power: f64, big_n: u32, alpha: Complex64) -> Result<Self> {
        Self::with_shift(power, big_n, alpha, 1.0)
    }

    pub fn with_shift(power: f64, big_n: u32, alpha: Complex64, a: f64) -> Result<Self> {
        if big_n % 2 == 0 {
            return domain(format!("N must be odd, got {big_n}"));
        }
        if !(alpha.re > 0.0) || !alpha.im.is_finite() {
            return Err(HerglotzError::Divergent(format!("Lambert series needs Re α > 0, got {alpha}")));
        }
        if !(a > 0.0 && a <= 1.0) {
            return domain(format!("shift a must lie in (0, 1], got {a}"));
        }
        if !power.is_finite() {
            return domain("non-finite power");
        }
        Ok(Self { power, big_n, alpha, a })
    }
}

/// 1 − e^{−x} without cancellation for small |x|.
fn one_minus_exp_neg(x: Complex64) -> Complex64 {
    if x.norm() < 0.1 {
        let mut term = x;
        let mut sum = x;
        for j in 2..14 {
            term *= -x / j as f64;
            sum += term;
        }
        sum
    } else {
        1.0 - (-x).exp()
    }
}

/// Upper bound for Σ_{m>n} m^p e^{−aR(2m)^e} / (1 − e^{−R(2m)^e}), or `None`
/// while the summand may still be increasing.
fn tail_bound(p: f64, e: f64, a: f64, r: f64, n: u64) -> Option<f64> {
    let m = (n + 1) as f64;
    let t0 = a * r * (2.0 * m).powf(e);
    let s = (p + 1.0) / e;
    if !(t0 > (p / e).max(s - 1.0) + 1.0) {
        return None;
    }
    let den = -(-r * (2.0 * m).powf(e)).exp_m1();
    let first = m.powf(p) * (-t0).exp();
    let c = 2f64.powf(-p - 1.0) / e * (a * r).powf(-s);
    let gamma_tail = if s > 1.0 { t0.powf(s - 1.0) * (-t0).exp() / (1.0 - (s - 1.0) / t0) } else { t0.powf(s - 1.0) * (-t0).exp() };
    Some((first + c * gamma_tail) / den)
}

/// Σ_{n≥1} χ(n) n^p e^{−a c (2n)^e} / (1 − e^{−c(2n)^e}) for Re c > 0, |χ| ≤ 1.
/// Returns value, error bound and terms used.
pub(crate) fn lambert_general(
    p: f64,
    e: f64,
    c: Complex64,
    a: f64,
    chi: &dyn Fn(u64) -> f64,
    tol: f64,
) -> Result<(Complex64, f64, u64)> {
    let r = c.re;
    if !(r > 0.0) {
        return Err(HerglotzError::Divergent(format!("Lambert series needs Re c > 0, got {c}")));
    }
    let mut acc = NeumaierC::default();
    let mut abs_sum = 0.0;
    let mut n = 1u64;
    loop {
        let w = chi(n);
        if w != 0.0 {
            let x = c * (2.0 * n as f64).powf(e);
            let term = w * (n as f64).powf(p) * (-a * x).exp() / one_minus_exp_neg(x);
            acc.add(term);
            abs_sum += term.norm();
        }
        if let Some(b) = tail_bound(p, e, a, r, n) {
            let total = acc.total();
            if b <= 0.1 * tol * total.norm() || b < 1e-300 {
                let err = b + 4.0 * f64::EPSILON * abs_sum;
                return Ok((total, err, n));
            }
        }
        if n >= BUDGET {
            return Err(HerglotzError::NonConvergence(format!("Lambert series with c = {c}, exponent {e} needs more than {BUDGET} terms")));
        }
        n += 1;
    }
}

/// Value of a generalized Lambert series.
pub fn lambert_sum(spec: LambertSpec, tol: f64) -> Result<EvalOutcome> {
    let (value, abs_err, terms) = lambert_general(spec.power, spec.big_n as f64, spec.alpha, spec.a, &|_| 1.0, tol)?;
    Ok(EvalOutcome { value, abs_err, terms_used: terms, method: Method::DirectSum })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(p: f64, n: u32, alpha: f64, a: f64, terms: u64) -> f64 {
        (1..=terms)
            .map(|m| {
                let x = (2.0 * m as f64).powi(n as i32) * alpha;
                (m as f64).powf(p) * (-a * x).exp() / -(-x).exp_m1()
            })
            .sum()
    }

    #[test]
    fn matches_brute_force() {
        for (p, n, alpha, a) in [(-3.0, 1, 1.0, 1.0), (-5.0, 3, 0.2, 1.0), (2.0, 1, 0.01, 0.5), (0.0, 3, 0.001, 1.0 / 3.0)] {
            let v = lambert_sum(LambertSpec::with_shift(p, n, Complex64::new(alpha, 0.0), a).unwrap(), 1e-15).unwrap();
            let b = brute(p, n, alpha, a, 500_000);
            assert!((v.value.re - b).abs() <= 1e-13 * b.abs(), "p={p} N={n} α={alpha}: {} vs {b}", v.value);
            assert!(v.abs_err < 1e-13 * b.abs());
        }
    }

    #[test]
    fn large_alpha_is_negligible() {
        let v = lambert_sum(LambertSpec::new(-3.0, 1, Complex64::new(50.0, 0.0)).unwrap(), 1e-14).unwrap();
        assert!(v.value.norm() < 1e-40);
        assert!((v.value.re / (-100f64).exp() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(LambertSpec::new(1.0, 2, Complex64::new(1.0, 0.0)).is_err());
        assert!(matches!(LambertSpec::new(1.0, 1, Complex64::new(-1.0, 0.0)), Err(HerglotzError::Divergent(_))));
        assert!(LambertSpec::with_shift(1.0, 1, Complex64::new(1.0, 0.0), 0.0).is_err());
    }
}
