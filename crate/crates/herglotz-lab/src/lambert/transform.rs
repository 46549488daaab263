//! Ramanujan's formula for ζ(2m+1), its companion, and their extensions to
//! Lambert series in (2n)^N.

use super::series::{lambert_general, lambert_sum, LambertSpec};
use crate::error::{domain, Result};
use crate::herglotz::{ext_f_at, LatticeSum, Weight, DEFAULT_TOL};
use crate::identities::{IdentityReport, Val, DEFAULT_TOLERANCE};
use crate::params;
use crate::special::{
    bernoulli_poly_rational, bernoulli_rational, periodic_dirichlet, small_rational, zeta_any, zeta_deriv_any, EULER_GAMMA,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use std::f64::consts::PI;

fn bern(n: usize) -> BigRational {
    bernoulli_rational(n).expect("index inside Bernoulli table")
}

fn fact(n: usize) -> BigRational {
    BigRational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i)))
}

fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn sign(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

fn to_f(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn lambert(power: f64, big_n: u32, alpha: Complex64, a: f64) -> Result<Val> {
    Ok(lambert_sum(LambertSpec::with_shift(power, big_n, alpha, a)?, DEFAULT_TOL)?.into())
}

fn check_positive(alpha: Complex64) -> Result<()> {
    if !(alpha.re > 0.0) || !alpha.im.is_finite() {
        return domain(format!("needs Re α > 0, got {alpha}"));
    }
    Ok(())
}

/// β with αβ^N = π^{N+1} on the principal branch; Re β > 0 is required.
pub fn dual_beta(alpha: Complex64, big_n: u32) -> Result<Complex64> {
    check_positive(alpha)?;
    if big_n % 2 == 0 {
        return domain(format!("N must be odd, got {big_n}"));
    }
    let n = big_n as f64;
    let beta = (PI.powf(n + 1.0) / alpha).powf(1.0 / n);
    if !(beta.re > 0.0) {
        return domain(format!("β = {beta} has Re β ≤ 0 for α = {alpha}"));
    }
    Ok(beta)
}

/// The 2N points ±i c e^{iπj/N}, c = β 2^{1/N}/(2π), j = −(N−1)/2, …, (N−1)/2.
fn rotated_points(beta: Complex64, big_n: u32) -> Vec<(Complex64, Complex64)> {
    let n = big_n as f64;
    let c = beta * 2f64.powf(1.0 / n) / (2.0 * PI);
    let half = (big_n as i64 - 1) / 2;
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::i();
    (-half..=half)
        .flat_map(|j| {
            let e = Complex64::from_polar(1.0, PI * j as f64 / n);
            [(one, i * c * e), (one, -i * c * e)]
        })
        .collect()
}

/// Σ_n χ(n) n^{−k} Σ_r w_r ψ(n^{N'} z_r) for k > 1.
fn psi_lattice(k: f64, nprime: f64, weight: Weight, points: Vec<(Complex64, Complex64)>) -> Result<Val> {
    let (l, dl) = match &weight {
        Weight::Unit => (zeta_any(k), zeta_deriv_any(k)),
        Weight::Periodic(v) => {
            if v.iter().all(|&x| x == 0.0) {
                return Ok(Val::zero());
            }
            periodic_dirichlet(k, v)
        }
    };
    let logs: Complex64 = points.iter().map(|&(w, z)| w * (l * z.ln() - nprime * dl)).sum();
    let lv = LatticeSum::new(k, nprime, weight, points).eval(DEFAULT_TOL)?;
    Ok(Val { v: lv.value + logs, e: lv.abs_err + 8.0 * f64::EPSILON * logs.norm(), terms: lv.terms })
}

/// Ramanujan's formula, αβ = π², m ≠ 0:
///
/// ```text
/// α^{−m}(ζ(2m+1)/2 + Σ n^{−2m−1}/(e^{2αn} − 1)) = (−β)^{−m}(ζ(2m+1)/2 + Σ n^{−2m−1}/(e^{2βn} − 1))
///   − 2^{2m} Σ_{j=0}^{m+1} (−1)^j B_{2j} B_{2m+2−2j} / ((2j)! (2m+2−2j)!) α^{m+1−j} β^j
/// ```
pub fn check_ramanujan(m: i32, alpha: Complex64) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a non-zero integer");
    }
    let beta = dual_beta(alpha, 1)?;
    let s = 2.0 * m as f64 + 1.0;
    let half = Val::real(zeta_any(s) / 2.0);
    let p = -2.0 * m as f64 - 1.0;
    let lhs = (half + lambert(p, 1, alpha, 1.0)?) * alpha.powi(-m);
    let mut poly = Complex64::new(0.0, 0.0);
    if m >= -1 {
        let mm = m as i64;
        for j in 0..=(mm + 1) {
            let (a, b) = (2 * j as usize, (2 * mm + 2 - 2 * j) as usize);
            let coef = pow2(2 * mm) * bern(a) * bern(b) / (fact(a) * fact(b));
            poly += sign(j) * to_f(&coef) * alpha.powi((mm + 1 - j) as i32) * beta.powi(j as i32);
        }
    }
    let rhs = (half + lambert(p, 1, beta, 1.0)?) * (-beta).powi(-m) - Val::exact(poly);
    Ok(IdentityReport::new("ramanujan", params!("m" => m, "alpha" => alpha, "beta" => beta), lhs, rhs, DEFAULT_TOLERANCE))
}

/// Companion formula, αβ = π², m ≥ 1:
///
/// ```text
/// α^{−(m−½)}(ζ(2m)/2 + Σ n^{−2m}/(e^{2αn} − 1)) − Σ_{j=0}^{m−1} 2^{2j−1} B_{2j}/(2j)! ζ(2m−2j+1) α^{2j−m−½}
///   = (−1)^{m+1} β^{−(m−½)} (γζ(2m)/π + (1/2π) Σ n^{−2m}(ψ(inβ/π) + ψ(−inβ/π)))
/// ```
pub fn check_companion(m: u32, alpha: Complex64) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a natural number");
    }
    let beta = dual_beta(alpha, 1)?;
    let mf = m as f64;
    let k = 2.0 * mf;
    let mut poly = Complex64::new(0.0, 0.0);
    for j in 0..m as usize {
        let coef = pow2(2 * j as i64 - 1) * bern(2 * j) / fact(2 * j);
        poly += to_f(&coef) * zeta_any(k - 2.0 * j as f64 + 1.0) * alpha.powf(2.0 * j as f64 - mf - 0.5);
    }
    let lhs = (Val::real(zeta_any(k) / 2.0) + lambert(-k, 1, alpha, 1.0)?) * alpha.powf(-(mf - 0.5)) - Val::exact(poly);
    // Σ n^{−k}(ψ(ny) + ψ(−ny)) with y = iβ/π, through 𝓕_{k,1}
    let y = Complex64::i() * beta / PI;
    let pair: Val = ext_f_at(k, 1.0, y)?.into();
    let pair = pair + ext_f_at(k, 1.0, -y)?.into();
    let ps = pair + Val::exact(zeta_any(k) * (y.ln() + (-y).ln()) - 2.0 * zeta_deriv_any(k));
    let rhs = (Val::real(EULER_GAMMA * zeta_any(k) / PI) + ps * (1.0 / (2.0 * PI))) * (sign(m as i64 + 1) * beta.powf(-(mf - 0.5)));
    Ok(IdentityReport::new("companion", params!("m" => m, "alpha" => alpha, "beta" => beta), lhs, rhs, DEFAULT_TOLERANCE))
}

/// One-parameter extension of the companion formula, N odd, αβ^N = π^{N+1}:
///
/// ```text
/// α^{−(2Nm/(N+1) − ½)}(ζ(2Nm+1−N)/2 + Σ n^{N−2Nm−1}/(e^{(2n)^N α} − 1))
///   − Σ_{j=0}^{m−1} B_{2j}/(2j)! ζ(2Nm+1−2Nj) 2^{N(2j−1)} α^{2j − 2Nm/(N+1) − ½}
///   = 2^{2m(N−1)} (−1)^{m+1} / (N π^{(N+1)/2}) β^{−(2Nm/(N+1) − N/2)}
///     (Nγ ζ(2m)/2^{N−1} + 2^{−N} Σ_j Σ_n n^{−2m}(ψ(i c n^{1/N} e_j) + ψ(−i c n^{1/N} e_j)))
/// ```
///
/// with c = β 2^{1/N}/(2π), e_j = e^{iπj/N}, j = −(N−1)/2, …, (N−1)/2.
pub fn check_thm211(m: u32, big_n: u32, alpha: Complex64) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a natural number");
    }
    let beta = dual_beta(alpha, big_n)?;
    let (mf, n) = (m as f64, big_n as f64);
    let e = 2.0 * n * mf / (n + 1.0);
    let mut poly = Complex64::new(0.0, 0.0);
    for j in 0..m as usize {
        let coef = bern(2 * j) / fact(2 * j) * pow2(big_n as i64 * (2 * j as i64 - 1));
        poly += to_f(&coef) * zeta_any(2.0 * n * mf + 1.0 - 2.0 * n * j as f64) * alpha.powf(2.0 * j as f64 - e - 0.5);
    }
    let lam = lambert(n - 2.0 * n * mf - 1.0, big_n, alpha, 1.0)?;
    let lhs = (Val::real(zeta_any(2.0 * n * mf + 1.0 - n) / 2.0) + lam) * alpha.powf(-(e - 0.5)) - Val::exact(poly);
    let ps = psi_lattice(2.0 * mf, 1.0 / n, Weight::Unit, rotated_points(beta, big_n))?;
    let inner = Val::real(n * EULER_GAMMA * zeta_any(2.0 * mf) / 2f64.powf(n - 1.0)) + ps * 2f64.powf(-n);
    let pre = 2f64.powf(2.0 * mf * (n - 1.0)) * sign(m as i64 + 1) / (n * PI.powf((n + 1.0) / 2.0)) * beta.powf(-(e - n / 2.0));
    let rhs = inner * pre;
    Ok(IdentityReport::new("thm211", params!("m" => m, "N" => big_n, "alpha" => alpha, "beta" => beta), lhs, rhs, DEFAULT_TOLERANCE))
}

/// Divisor-type Lambert series Σ n^{N−1}/(e^{(2n)^N α} − 1), N odd, αβ^N = π^{N+1}:
///
/// ```text
/// Σ n^{N−1}/(e^{(2n)^N α} − 1) − (Nγ − log 2π − (N−1) log 2)/(2^N α N)
///   = log(β/α)/(2^N α (N+1)) + 2/(2^N α N) Σ_j Σ_n (log z − ½(ψ(iz) + ψ(−iz))) + {¼ if N = 1}
/// ```
///
/// with z = c n^{1/N} e_j as in [`check_thm211`].
pub fn check_thm212(big_n: u32, alpha: Complex64) -> Result<IdentityReport> {
    let beta = dual_beta(alpha, big_n)?;
    let n = big_n as f64;
    let scale = 2f64.powf(n) * alpha;
    let lam = lambert(n - 1.0, big_n, alpha, 1.0)?;
    let konst = (n * EULER_GAMMA - (2.0 * PI).ln() - (n - 1.0) * 2f64.ln()) / (scale * n);
    let lhs = lam - Val::exact(konst);
    // log z − ½(ψ(iz) + ψ(−iz)) = −½(g(iz) + g(−iz)) with g = ψ − log
    let lv = LatticeSum::new(0.0, 1.0 / n, Weight::Unit, rotated_points(beta, big_n)).eval(DEFAULT_TOL)?;
    let d = Val { v: -0.5 * lv.value, e: 0.5 * lv.abs_err, terms: lv.terms };
    let extra = if big_n == 1 { 0.25 } else { 0.0 };
    let rhs = Val::exact((beta / alpha).ln() / (scale * (n + 1.0)) + extra) + d * (2.0 / (scale * n));
    Ok(IdentityReport::new("thm212", params!("N" => big_n, "alpha" => alpha, "beta" => beta), lhs, rhs, DEFAULT_TOLERANCE)
        .with_note("corrected form: log(β/α), constant Nγ − log 2π − (N−1) log 2, extra term ¼ for N = 1"))
}

fn cos_frac(r: i64, q: i64) -> f64 {
    let r = r.rem_euclid(q);
    if (4 * r) % q == 0 {
        return [1.0, 0.0, -1.0, 0.0][(4 * r / q) as usize];
    }
    (2.0 * PI * r as f64 / q as f64).cos()
}

fn sin_frac(r: i64, q: i64) -> f64 {
    let r = r.rem_euclid(q);
    if (4 * r) % q == 0 {
        return [0.0, 1.0, 0.0, -1.0][(4 * r / q) as usize];
    }
    (2.0 * PI * r as f64 / q as f64).sin()
}

/// The shifted transformation for rational 0 < a ≤ 1, N odd, αβ^N = π^{N+1}:
///
/// ```text
/// α^{−2Nm/(N+1)} ((a − ½)ζ(2Nm+1) + Σ_{j=1}^{m−1} B_{2j+1}(a)/(2j+1)! ζ(2Nm+1−2jN)(2^N α)^{2j}
///                 + Σ n^{−2Nm−1} e^{−a(2n)^N α}/(1 − e^{−(2n)^N α}))
///   = (−1)^m β^{−2Nm/(N+1)} 2^{2m(N−1)}/N · { (−1)^{m+1}(2π)^{2m} B_{2m+1}(a) Nγ/(2m+1)!
///       + ½ Σ cos(2πna)/n^{2m+1}
///       + (−1)^{(N+3)/2} Σ_j (−1)^j Σ_n cos(2πna) n^{−2m−1}/(e^{(2n)^{1/N} β e_j} − 1)
///       + (1/2π) Σ_j Σ_n sin(2πna) n^{−2m−1}(ψ(z) + ψ(−z)) }
///     + (−1)^{m+(N+3)/2} 2^{2Nm} Σ_{j=0}^{⌊(N+1)/(2N)+m⌋} (−1)^j B_{2j}(a) B_{N+1+2N(m−j)}
///       / ((2j)! (N+1+2N(m−j))!) α^{2j/(N+1)} β^{N+2N²(m−j)/(N+1)}
/// ```
///
/// with z = iβ(2n)^{1/N} e_j/(2π).
pub fn check_zetagen_a(a: f64, m: u32, big_n: u32, alpha: Complex64) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a natural number");
    }
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("a must lie in (0, 1], got {a}"));
    }
    let (ap, aq) = small_rational(a).ok_or_else(|| crate::HerglotzError::Domain(format!("a = {a} must be rational with denominator ≤ 1000")))?;
    let beta = dual_beta(alpha, big_n)?;
    let (mf, n) = (m as f64, big_n as f64);
    let (mi, ni) = (m as i64, big_n as i64);
    let e = 2.0 * n * mf / (n + 1.0);

    let mut poly = Complex64::new(0.0, 0.0);
    for j in 1..m as usize {
        let coef = bernoulli_poly_rational(2 * j + 1, ap, aq) / fact(2 * j + 1);
        poly += to_f(&coef) * zeta_any(2.0 * n * mf + 1.0 - 2.0 * j as f64 * n) * (2f64.powf(n) * alpha).powi(2 * j as i32);
    }
    let lam = lambert(-2.0 * n * mf - 1.0, big_n, alpha, a)?;
    let lhs = (Val::exact((a - 0.5) * zeta_any(2.0 * n * mf + 1.0) + poly) + lam) * alpha.powf(-e);

    let cos_w: Vec<f64> = (1..=aq).map(|r| cos_frac(r * ap, aq)).collect();
    let sin_w: Vec<f64> = (1..=aq).map(|r| sin_frac(r * ap, aq)).collect();
    let s = 2.0 * mf + 1.0;
    let b2m1 = to_f(&(bernoulli_poly_rational(2 * m as usize + 1, ap, aq) / fact(2 * m as usize + 1)));
    let t1 = sign(mi + 1) * (2.0 * PI).powf(2.0 * mf) * b2m1 * n * EULER_GAMMA;
    let cs = periodic_dirichlet(s, &cos_w).0;

    let half = (ni - 1) / 2;
    let chi = |k: u64| cos_w[((k - 1) % aq as u64) as usize];
    let parts: Vec<Result<Val>> = (-half..=half)
        .into_par_iter()
        .map(|j| {
            let c = beta * Complex64::from_polar(1.0, PI * j as f64 / n);
            let (v, err, terms) = lambert_general(-s, 1.0 / n, c, 1.0, &chi, DEFAULT_TOL)?;
            Ok(Val { v: v * sign(j), e: err, terms })
        })
        .collect();
    let mut lamj = Val::zero();
    for p in parts {
        lamj = lamj + p?;
    }
    let psij = psi_lattice(s, 1.0 / n, Weight::Periodic(sin_w), rotated_points(beta, big_n))? * (1.0 / (2.0 * PI));
    let sgn = sign((ni + 3) / 2);
    let pre = sign(mi) * beta.powf(-e) * 2f64.powf(2.0 * mf * (n - 1.0)) / n;
    let inner = Val::exact(Complex64::new(t1 + 0.5 * cs, 0.0)) + lamj * sgn + psij;

    let mut bsum = Complex64::new(0.0, 0.0);
    let upper = mi + if big_n == 1 { 1 } else { 0 };
    for j in 0..=upper {
        let idx = (ni + 1 + 2 * ni * (mi - j)) as usize;
        let coef = bernoulli_poly_rational(2 * j as usize, ap, aq) * bern(idx) / (fact(2 * j as usize) * fact(idx));
        let ej = 2.0 * j as f64 / (n + 1.0);
        let eb = n + 2.0 * n * n * (mf - j as f64) / (n + 1.0);
        bsum += sign(j) * to_f(&coef) * alpha.powf(ej) * beta.powf(eb);
    }
    bsum *= sign(mi + (ni + 3) / 2) * 2f64.powf(2.0 * n * mf);
    let rhs = inner * pre + Val::exact(bsum);
    Ok(IdentityReport::new(
        "zetagen_a",
        params!("a" => a, "m" => m, "N" => big_n, "alpha" => alpha, "beta" => beta),
        lhs,
        rhs,
        DEFAULT_TOLERANCE,
    )
    .with_note("½ multiplies only the cosine Dirichlet series; (−1)^{(N+3)/2} multiplies only the Lambert j-sum"))
}
