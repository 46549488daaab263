//! Riemann and Hurwitz zeta on the real line by Euler–Maclaurin summation,
//! with the functional equation for s < −1.

use super::bernoulli::bernoulli_number;
use super::digamma::digamma_real;
use super::gamma::{factorial, ln_gamma_abs};
use super::sum::Neumaier;
use super::STIELTJES_GAMMA1;
use crate::error::{domain, HerglotzError, Result};
use std::f64::consts::PI;

/// Number of direct terms before the Euler–Maclaurin remainder takes over.
const EM_HEAD: f64 = 50.0;
/// Bernoulli correction terms in the Euler–Maclaurin remainder.
const EM_TERMS: usize = 12;

/// Pieces of ζ(s, a) = head + pole + rest, where pole = b^{1−s}/(s−1).
struct EulerMaclaurin {
    head: f64,
    rest: f64,
    b: f64,
    dhead: f64,
    drest: f64,
}

fn euler_maclaurin(s: f64, a: f64, deriv: bool) -> EulerMaclaurin {
    let b_min = EM_HEAD.max(1.2 * s.abs());
    let mut head = Neumaier::default();
    let mut dhead = Neumaier::default();
    let mut b = a;
    while b < b_min {
        let t = b.powf(-s);
        head.add(t);
        if deriv {
            dhead.add(-b.ln() * t);
        }
        b += 1.0;
    }
    let (head, dhead) = (head.total(), dhead.total());
    let lb = b.ln();
    let bs = (-s * lb).exp();
    let mut rest = 0.5 * bs;
    let mut drest = if deriv { -0.5 * lb * bs } else { 0.0 };
    // P_j(s) = s (s+1) … (s+2j−2) and its derivative
    let mut p = s;
    let mut dp = 1.0;
    let mut bpow = bs / b; // b^{−s−1}
    for j in 1..=EM_TERMS {
        let c = bernoulli_number(2 * j) / factorial(2 * j);
        rest += c * p * bpow;
        if deriv {
            drest += c * (dp - lb * p) * bpow;
        }
        for shift in [2 * j - 1, 2 * j] {
            let f = s + shift as f64;
            dp = dp * f + p;
            p *= f;
        }
        bpow /= b * b;
    }
    EulerMaclaurin { head, rest, b, dhead, drest }
}

/// Hurwitz ζ(s, a) for a > 0 and s > −1, s ≠ 1.
pub(crate) fn hurwitz(s: f64, a: f64) -> f64 {
    let em = euler_maclaurin(s, a, false);
    em.head + em.rest + em.b.powf(1.0 - s) / (s - 1.0)
}

/// ∂/∂s ζ(s, a) for a > 0 and s > −1, s ≠ 1.
pub(crate) fn hurwitz_ds(s: f64, a: f64) -> f64 {
    let em = euler_maclaurin(s, a, true);
    let lb = em.b.ln();
    let pole = em.b.powf(1.0 - s) / (s - 1.0);
    em.dhead + em.drest - lb * pole - pole / (s - 1.0)
}

/// Tail Σ_{n>m} n^{−s} for s > 1.
pub(crate) fn zeta_tail(s: f64, m: u64) -> f64 {
    hurwitz(s, m as f64 + 1.0)
}

/// ζ(s) − 1/(s−1), accurate through s = 1 (value γ there).
#[cfg(test)]
pub(crate) fn zeta_regular(s: f64) -> f64 {
    let em = euler_maclaurin(s, 1.0, false);
    let lb = em.b.ln();
    let polepart = if s == 1.0 { -lb } else { ((1.0 - s) * lb).exp_m1() / (s - 1.0) };
    em.head + em.rest + polepart
}

/// ζ(s) for every real s ≠ 1 (NaN at the pole). Non-positive integers use
/// ζ(−n) = −B_{n+1}/(n+1); s < 0 uses the functional equation.
pub(crate) fn zeta_any(s: f64) -> f64 {
    if s == 1.0 {
        return f64::NAN;
    }
    if s <= 0.0 && s == s.floor() {
        let n = (-s) as usize;
        if n == 0 {
            return -0.5;
        }
        if n % 2 == 0 {
            return 0.0;
        }
        return -bernoulli_number(n + 1) / (n as f64 + 1.0);
    }
    if s >= 0.0 {
        return hurwitz(s, 1.0);
    }
    // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
    let sin = (0.5 * PI * s).sin();
    let log_mag = s * (2.0 * PI).ln() - PI.ln() + ln_gamma_abs(1.0 - s);
    let sign_gamma = if gamma_sign(1.0 - s) { 1.0 } else { -1.0 };
    sign_gamma * sin * log_mag.exp() * zeta_any(1.0 - s)
}

/// true when Γ(x) > 0
fn gamma_sign(x: f64) -> bool {
    if x > 0.0 {
        return true;
    }
    // Γ alternates sign between consecutive negative integers
    (x.floor() as i64) % 2 == 0
}

/// ζ'(s) for every real s ≠ 1.
pub(crate) fn zeta_deriv_any(s: f64) -> f64 {
    if s == 1.0 {
        return f64::NAN;
    }
    if s >= 0.0 {
        return hurwitz_ds(s, 1.0);
    }
    // ζ(s) = χ(s) ζ(1−s) with χ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s)
    let t = 1.0 - s;
    let base = (s * (2.0 * PI).ln() - PI.ln() + ln_gamma_abs(t)).exp()
        * if gamma_sign(t) { 1.0 } else { -1.0 };
    let sin = (0.5 * PI * s).sin();
    let cos = (0.5 * PI * s).cos();
    let psi = digamma_real(t).unwrap_or(f64::NAN);
    let chi = base * sin;
    let dchi = base * ((2.0 * PI).ln() * sin + 0.5 * PI * cos - psi * sin);
    dchi * zeta_any(t) - chi * zeta_deriv_any(t)
}

/// Riemann ζ(s) for real s ≠ 1.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if s == 1.0 {
        return Err(HerglotzError::Pole("zeta at s = 1".into()));
    }
    if !s.is_finite() {
        return domain(format!("zeta of non-finite {s}"));
    }
    Ok(zeta_any(s))
}

/// ζ'(s) = −Σ log n / n^s for s > 1.
pub fn riemann_zeta_deriv(s: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return domain(format!("zeta derivative needs s > 1, got {s}"));
    }
    Ok(hurwitz_ds(s, 1.0))
}

/// First Stieltjes constant γ₁.
pub fn stieltjes_gamma1() -> f64 {
    STIELTJES_GAMMA1
}

/// Σ_{n≥1} χ(n) n^{−s} for a χ of period P = chi.len() (χ(n) = chi[(n−1) % P]),
/// together with its s-derivative. Needs s > 1.
pub(crate) fn periodic_dirichlet(s: f64, chi: &[f64]) -> (f64, f64) {
    let p = chi.len() as f64;
    let lp = p.ln();
    let ps = p.powf(-s);
    let mut v = 0.0;
    let mut dv = 0.0;
    for (r, &c) in chi.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let a = (r as f64 + 1.0) / p;
        let h = hurwitz(s, a);
        v += c * h;
        dv += c * (hurwitz_ds(s, a) - lp * h);
    }
    (ps * v, ps * dv)
}

/// Tail Σ_{n>m} χ(n) n^{−s} for periodic χ; m must be a multiple of the period.
pub(crate) fn periodic_tail(s: f64, chi: &[f64], m: u64) -> f64 {
    let p = chi.len() as u64;
    debug_assert_eq!(m % p, 0);
    let pf = p as f64;
    let mut v = 0.0;
    for (r, &c) in chi.iter().enumerate() {
        if c != 0.0 {
            v += c * hurwitz(s, (m as f64 + r as f64 + 1.0) / pf);
        }
    }
    pf.powf(-s) * v
}

/// Double zeta ζ(m, n) = Σ_{p>q>0} p^{−m} q^{−n}.
///
/// The inner tails T(q) = ζ(m) − Σ_{p≤q} p^{−m} are accumulated directly up to
/// q = Q; beyond Q the Euler–Maclaurin form of T(q) turns the remaining outer
/// sum into a short combination of zeta tails.
pub fn double_zeta(m: u32, n: u32) -> Result<f64> {
    if m < 2 || n < 1 {
        return domain(format!("double zeta needs m ≥ 2, n ≥ 1, got ({m}, {n})"));
    }
    const Q: u64 = 4000;
    let (mf, nf) = (m as f64, n as f64);
    let mut tq = zeta_any(mf);
    let mut acc = 0.0;
    let mut comp = 0.0;
    for q in 1..=Q {
        let qf = q as f64;
        tq -= qf.powf(-mf);
        let y = tq * qf.powf(-nf) - comp;
        let t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    // T(q) ~ q^{1−m}/(m−1) − q^{−m}/2 + Σ_j B_{2j}/(2j)! (m)_{2j−1} q^{−m−2j+1}
    let mut tail = zeta_tail(mf + nf - 1.0, Q) / (mf - 1.0) - 0.5 * zeta_tail(mf + nf, Q);
    let mut poch = mf;
    for j in 1..=4usize {
        let c = bernoulli_number(2 * j) / factorial(2 * j) * poch;
        tail += c * zeta_tail(mf + nf + 2.0 * j as f64 - 1.0, Q);
        poch *= (mf + 2.0 * j as f64 - 1.0) * (mf + 2.0 * j as f64);
    }
    Ok(acc + tail)
}
