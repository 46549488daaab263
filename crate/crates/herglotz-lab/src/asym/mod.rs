//! Asymptotic expansions of 𝓕_{k,N}, of the pair 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π),
//! and of the generalized Lambert series, each optimally truncated.

mod compare;
mod series;

pub use compare::{asym_row, check_asym, AsymParams, AsymRow, AsymTarget};
pub use series::AsymSeries;

use crate::error::{domain, gate, Result};
use crate::herglotz::{check_cut, EvalOutcome, HerglotzParams, Method};
use crate::identities::{CorrectionB, CorrectionC};
use crate::special::{bernoulli_number, zeta_any, zeta_deriv_any, BERNOULLI_MAX, EULER_GAMMA, STIELTJES_GAMMA1};
use num_complex::Complex64;
use std::f64::consts::PI;

fn outcome(constant: Complex64, s: &AsymSeries) -> EvalOutcome {
    let value = constant + s.sum();
    EvalOutcome {
        value,
        abs_err: s.remainder_bound + 8.0 * f64::EPSILON * value.norm(),
        terms_used: s.used() as u64,
        method: Method::Asymptotic,
    }
}

fn bern(n: usize) -> f64 {
    if n > BERNOULLI_MAX {
        f64::INFINITY
    } else {
        bernoulli_number(n)
    }
}

fn parity(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// 𝓕_{k,N}(x) ~ −ζ(k+N)/(2x) − Σ_{n≥1} B_{2n}/(2n) ζ(k+2nN) x^{−2n} as x → ∞.
pub fn ext_f_asym_inf(p: HerglotzParams, x: Complex64, terms: usize) -> Result<EvalOutcome> {
    check_cut(x)?;
    let lead = -zeta_any(p.k + p.big_n) / (2.0 * x);
    let s = AsymSeries::build(x, terms, |n| {
        let nf = n as f64;
        -bern(2 * n) / (2.0 * nf) * zeta_any(p.k + 2.0 * nf * p.big_n) * x.powi(-2 * n as i32)
    });
    Ok(outcome(lead, &s))
}

/// 𝓕_{k,N}(x) as x → 0 for integers 1 < k ≤ N or k = 1:
///
/// ```text
/// 1 < k ≤ N: −ζ(k+N)/x − (γ + log x)ζ(k) + Nζ'(k) + (π/N) ζ(1+(k−1)/N)/sin(π(k−1)/N) x^{(k−1)/N}
///            + x^{(k−1)/N} 𝓑(k, N, x) + (−1)^k Σ_m (−1)^{m(N+1)} ζ(k−mN) ζ(1+m) x^m
/// k = 1:     −ζ(N+1)/x + (π²/6 − (N−1)γ log x + ½log²x − Nγ² − (N²+1)γ₁)/N + 𝓑(1, N, x)
///            − Σ_m (−1)^{m(N+1)} ζ(1−mN) ζ(1+m) x^m
/// ```
pub fn ext_f_asym_zero(k: u32, big_n: u32, x: Complex64, terms: usize) -> Result<EvalOutcome> {
    check_cut(x)?;
    if big_n == 0 || k == 0 || k > big_n {
        return gate(format!("needs integers k = 1 or 1 < k ≤ N, got k = {k}, N = {big_n}"));
    }
    let (kf, n) = (k as f64, big_n as f64);
    let l = x.ln();
    let b = CorrectionB::new(k, big_n).value(x);
    let constant = if k == 1 {
        -zeta_any(n + 1.0) / x
            + (PI * PI / 6.0 - (n - 1.0) * EULER_GAMMA * l + 0.5 * l * l - n * EULER_GAMMA * EULER_GAMMA - (n * n + 1.0) * STIELTJES_GAMMA1) / n
            + b
    } else {
        let w = (kf - 1.0) / n;
        let xw = x.powf(w);
        -zeta_any(kf + n) / x - (EULER_GAMMA + l) * zeta_any(kf) + n * zeta_deriv_any(kf)
            + PI / n * zeta_any(1.0 + w) / (PI * w).sin() * xw
            + xw * b
    };
    let outer = if k == 1 { -1.0 } else { parity(k as i64) };
    let s = AsymSeries::build(x, terms, |m| {
        let mf = m as f64;
        outer * parity(m as i64 * (big_n as i64 + 1)) * zeta_any(kf - mf * n) * zeta_any(1.0 + mf) * x.powi(m as i32)
    });
    Ok(outcome(constant, &s))
}

/// 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π) ~ Σ_{n≥1} (−1)^{n+1} B_{2n}/n ζ(k+2nN) (2π/x)^{2n} as x → ∞.
pub fn pair_asym_inf(p: HerglotzParams, x: Complex64, terms: usize) -> Result<EvalOutcome> {
    if !(x.re > 0.0) {
        return domain(format!("needs Re x > 0, got {x}"));
    }
    let w = 2.0 * PI / x;
    let s = AsymSeries::build(x, terms, |n| {
        let nf = n as f64;
        parity(n as i64 + 1) * bern(2 * n) / nf * zeta_any(p.k + 2.0 * nf * p.big_n) * w.powi(2 * n as i32)
    });
    Ok(outcome(Complex64::new(0.0, 0.0), &s))
}

/// 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π) as x → 0 for odd k and N:
///
/// ```text
/// 2{(log(2π/x) − γ)ζ(k) + Nζ'(k)} − 𝓒(k, N, x)
///   + (−1)^{(k+1)/2+1} (x/2π)^{(k−1)/N} Σ_{p ≥ 1, N | (k−1)/2+p} (−1)^p B_{2p}/p ζ((N+k+2p−1)/N) (x/2π)^{2p/N}
/// ```
///
/// For k = 1 the constant part is
/// (π²/12 − 2Nγ² + 2(N−1)γ log(2π/x) + log²(2π) − log(4π²/x) log x − 2(N²+1)γ₁)/N.
pub fn pair_asym_zero(k: u32, big_n: u32, x: Complex64, terms: usize) -> Result<EvalOutcome> {
    if k % 2 == 0 || big_n % 2 == 0 || k == 0 || big_n == 0 {
        return gate(format!("needs odd k and N, got k = {k}, N = {big_n}"));
    }
    if !(x.re > 0.0) {
        return domain(format!("needs Re x > 0, got {x}"));
    }
    let (kf, n) = (k as f64, big_n as f64);
    let g = EULER_GAMMA;
    let constant = if k == 1 {
        let l2p = (2.0 * PI).ln();
        Complex64::new(PI * PI / 12.0 - 2.0 * n * g * g - 2.0 * (n * n + 1.0) * STIELTJES_GAMMA1 + l2p * l2p, 0.0)
            .add_logs(n, g, x)
            / n
    } else {
        2.0 * (((2.0 * PI / x).ln() - g) * zeta_any(kf) + n * zeta_deriv_any(kf)) - CorrectionC::new(k, big_n)?.value(x)?
    };
    let y = x / (2.0 * PI);
    let pre = parity(((k + 1) / 2 + 1) as i64) * y.powf((kf - 1.0) / n);
    // the n-th surviving p: p = N ℓ − (k−1)/2 for the n-th ℓ with p ≥ 1
    let half = (k as i64 - 1) / 2;
    let l0 = (half + 1 + big_n as i64 - 1) / big_n as i64;
    let s = AsymSeries::build(x, terms, |idx| {
        let p = big_n as i64 * (l0 + idx as i64 - 1) - half;
        let pf = p as f64;
        pre * parity(p) * bern(2 * p as usize) / pf * zeta_any((n + kf + 2.0 * pf - 1.0) / n) * y.powf(2.0 * pf / n)
    });
    Ok(outcome(constant, &s))
}

trait AddLogs {
    fn add_logs(self, n: f64, g: f64, x: Complex64) -> Complex64;
}

impl AddLogs for Complex64 {
    /// Adds 2(N−1)γ log(2π/x) − log(4π²/x) log x.
    fn add_logs(self, n: f64, g: f64, x: Complex64) -> Complex64 {
        self + 2.0 * (n - 1.0) * g * (2.0 * PI / x).ln() - (4.0 * PI * PI / x).ln() * x.ln()
    }
}

/// Σ n^{N−2Nm−1}/(e^{(2n)^N α} − 1) as α → 0⁺, N odd, m ≥ 1:
///
/// ```text
/// ζ(2Nm+1)/(2^N α) − ½ζ(2Nm+1−N) + 𝓓_N(m, α)
///   + (−1)^{m+1} 2^{(2m−1)(N−1)} α^{2m−1}/(N π^{2m}) Σ_ℓ (−1)^{ℓ+1} B_{2ℓN}/(2ℓ) ζ(2m+2ℓ) (2^{N−1}α/π)^{2ℓ}
/// 𝓓_N(m, α) = (−1)^{m+1} 2^{(2m−1)(N−1)} α^{2m−1}/(N π^{2m}) {ζ(2m)(Nγ − log(2^{N−1}α/π)) − ζ'(2m)}
///   + Σ_{j=1}^{m−1} B_{2j} ζ(2Nm+1−2Nj)/(2j)! 2^{N(2j−1)} α^{2j−1}
/// ```
pub fn lambert_asym(m: u32, big_n: u32, alpha: f64, terms: usize) -> Result<EvalOutcome> {
    if m == 0 || big_n % 2 == 0 {
        return gate(format!("needs m ≥ 1 and odd N, got m = {m}, N = {big_n}"));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return domain(format!("needs α > 0, got {alpha}"));
    }
    let (mf, n) = (m as f64, big_n as f64);
    let pre = parity(m as i64 + 1) * 2f64.powf((2.0 * mf - 1.0) * (n - 1.0)) * alpha.powf(2.0 * mf - 1.0) / (n * PI.powf(2.0 * mf));
    let r = 2f64.powf(n - 1.0) * alpha / PI;
    let mut d = pre * (zeta_any(2.0 * mf) * (n * EULER_GAMMA - r.ln()) - zeta_deriv_any(2.0 * mf));
    let mut fact = 1.0;
    for j in 1..m {
        let jf = j as f64;
        fact *= (2.0 * jf - 1.0) * (2.0 * jf);
        d += bern(2 * j as usize) * zeta_any(2.0 * n * mf + 1.0 - 2.0 * n * jf) / fact * 2f64.powf(n * (2.0 * jf - 1.0)) * alpha.powf(2.0 * jf - 1.0);
    }
    let constant = zeta_any(2.0 * n * mf + 1.0) / (2f64.powf(n) * alpha) - 0.5 * zeta_any(2.0 * n * mf + 1.0 - n) + d;
    let s = AsymSeries::build(Complex64::new(alpha, 0.0), terms, |l| {
        let lf = l as f64;
        let b = bern(2 * l * big_n as usize);
        Complex64::new(pre * parity(l as i64 + 1) * b / (2.0 * lf) * zeta_any(2.0 * mf + 2.0 * lf) * r.powi(2 * l as i32), 0.0)
    });
    Ok(outcome(Complex64::new(constant, 0.0), &s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herglotz::ext_f_at;
    use crate::lambert::{lambert_sum, LambertSpec};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn within(a: &EvalOutcome, truth: Complex64, slack: f64) {
        let d = (a.value - truth).norm();
        assert!(d <= a.abs_err + slack, "asym {} vs {truth}: diff {d:.3e}, bound {:.3e}", a.value, a.abs_err);
    }

    fn truth_f(k: f64, n: f64, x: Complex64) -> (Complex64, f64) {
        let t = ext_f_at(k, n, x).unwrap();
        (t.value, t.abs_err)
    }

    #[test]
    fn large_x() {
        for (k, n, x) in [(1.0, 1.0, 50.0), (2.0, 3.0, 30.0)] {
            let a = ext_f_asym_inf(HerglotzParams::new(k, n).unwrap(), c(x), 30).unwrap();
            within(&a, ext_f_at(k, n, c(x)).unwrap().value, 1e-15);
        }
        let lead = ext_f_asym_inf(HerglotzParams::new(1.0, 1.0).unwrap(), c(100.0), 0).unwrap();
        let truth = ext_f_at(1.0, 1.0, c(100.0)).unwrap().value;
        assert!((lead.value - truth).norm() <= zeta_any(3.0) / 12.0 / 1e4);
    }

    #[test]
    fn small_x() {
        for (k, n, x) in [(2, 2, 0.01), (1, 1, 0.02), (2, 3, 1e-4), (1, 3, 1e-4)] {
            let a = ext_f_asym_zero(k, n, c(x), 30).unwrap();
            let (t, e) = truth_f(k as f64, n as f64, c(x));
            within(&a, t, e + 1e-14);
        }
        // at x = 0.05 the rotated-argument contribution e^{−c/√x} is still 4e−13
        let a = ext_f_asym_zero(2, 2, c(0.05), 30).unwrap();
        assert!((a.value - truth_f(2.0, 2.0, c(0.05)).0).norm() < 1e-12);
        assert!(ext_f_asym_zero(3, 2, c(0.1), 5).is_err());
    }

    #[test]
    fn pairs() {
        let pair = |k: f64, n: f64, x: f64| {
            let y = Complex64::new(0.0, x / (2.0 * PI));
            ext_f_at(k, n, y).unwrap().value + ext_f_at(k, n, -y).unwrap().value
        };
        let a = pair_asym_inf(HerglotzParams::new(3.0, 1.0).unwrap(), c(40.0), 30).unwrap();
        within(&a, pair(3.0, 1.0, 40.0), 1e-14);
        for (k, n, x) in [(3, 1, 0.3), (5, 1, 0.5), (1, 1, 0.3), (3, 3, 0.002), (1, 3, 0.002)] {
            let a = pair_asym_zero(k, n, c(x), 30).unwrap();
            let truth = pair(k as f64, n as f64, x);
            within(&a, truth, 1e-12);
            assert!(truth.im.abs() < 1e-11);
        }
        assert!(pair_asym_zero(2, 3, c(0.1), 5).is_err());
    }

    #[test]
    fn lambert() {
        for (m, n, alpha) in [(1, 1, 0.05), (2, 1, 0.1), (1, 3, 0.0025)] {
            let a = lambert_asym(m, n, alpha, 30).unwrap();
            let p = n as f64 - 2.0 * (n * m) as f64 - 1.0;
            let s = lambert_sum(LambertSpec::new(p, n, c(alpha)).unwrap(), 1e-15).unwrap();
            within(&a, s.value, 1e-12 * s.value.norm());
        }
        let alpha = 1e-4;
        let a = lambert_asym(1, 1, alpha, 10).unwrap();
        assert!((a.value.re * 2.0 * alpha / zeta_any(3.0) - 1.0).abs() < 1e-3);
    }
}
