//! Functional equations of 𝓕_{k,N} and the transformations that follow from them.
//!
//! Σ'' denotes a sum over j = −(N−1), −(N−3), …, N−1.

use super::corrections::{CorrectionB, CorrectionBranch, CorrectionC};
use super::report::{IdentityReport, DEFAULT_TOLERANCE};
use super::val::Val;
use crate::error::{domain, gate, Result};
use crate::herglotz::{check_cut, ext_f_at};
use crate::params;
use crate::special::{riemann_zeta_deriv, zeta_any, EULER_GAMMA, STIELTJES_GAMMA1};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

fn ff(k: f64, big_n: f64, x: Complex64) -> Result<Val> {
    Ok(ext_f_at(k, big_n, x)?.into())
}

fn expi(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, t)
}

/// Σ'' of weight(j)·value(j), evaluated in parallel and summed in j order.
fn jsum<W, V>(big_n: u32, weight: W, value: V) -> Result<Val>
where
    W: Fn(f64) -> Complex64 + Sync,
    V: Fn(f64) -> Result<Val> + Sync,
{
    let n = big_n as i64;
    let js: Vec<f64> = (0..n).map(|i| (-(n - 1) + 2 * i) as f64).collect();
    let parts: Vec<Result<Val>> = js.par_iter().map(|&j| Ok(value(j)? * weight(j))).collect();
    let mut total = Val::zero();
    for p in parts {
        total = total + p?;
    }
    Ok(total)
}

fn zeta_deriv(s: f64) -> Result<f64> {
    riemann_zeta_deriv(s)
}

fn require_right_half(x: Complex64) -> Result<()> {
    if !(x.re > 0.0) {
        return domain(format!("this transformation needs Re x > 0, got {x}"));
    }
    Ok(())
}

/// Both sides of the functional equation for 1 < k ≤ N:
///
/// ```text
/// x^{(1−k)/N} 𝓕_{k,N}(x) − (−1)^k/N Σ'' e^{iπj(k−1)/N} 𝓕_{(N+k−1)/N,1/N}(e^{−iπj/N} x^{−1/N})
///   = π ζ(1+(k−1)/N) / (N sin(π(k−1)/N)) + x^{(1−k)/N}(−(γ + log x) ζ(k) + N ζ'(k))
///     − ζ(k+N) x^{−(N+k−1)/N} + 𝓑(k, N, x)
/// ```
fn thm21_sides(k: u32, big_n: u32, x: Complex64) -> Result<(Val, Val)> {
    if !(1 < k && k <= big_n) {
        return gate(format!("needs integers 1 < k ≤ N, got k = {k}, N = {big_n}"));
    }
    check_cut(x)?;
    let (kf, n) = (k as f64, big_n as f64);
    let kp = (n + kf - 1.0) / n;
    let root = x.powf(1.0 / n);
    let xpow = x.powf((1.0 - kf) / n);
    let s = jsum(big_n, |j| expi(PI * j * (kf - 1.0) / n), |j| ff(kp, 1.0 / n, expi(-PI * j / n) / root))?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let lhs = ff(kf, n, x)? * xpow - s * (sign / n);
    let rhs = PI / n * zeta_any(1.0 + (kf - 1.0) / n) / (PI * (kf - 1.0) / n).sin()
        + xpow * (-(EULER_GAMMA + x.ln()) * zeta_any(kf) + n * zeta_deriv(kf)?)
        - zeta_any(kf + n) / x.powf(kp)
        + CorrectionB::new(k, big_n).value(x);
    Ok((lhs, Val::exact(rhs)))
}

/// Functional equation of 𝓕_{k,N} for integers 1 < k ≤ N.
pub fn check_thm21(k: u32, big_n: u32, x: Complex64) -> Result<IdentityReport> {
    let (lhs, rhs) = thm21_sides(k, big_n, x)?;
    Ok(IdentityReport::new("thm21", params!("k" => k, "N" => big_n, "x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

/// The k = 1 functional equation:
///
/// ```text
/// 𝓕_{1,N}(x) + (1/N) Σ'' 𝓕_{1,1/N}(e^{−iπj/N} x^{−1/N})
///   = (π²/6 − (N−1)γ log x + ½log²x − Nγ² − (N²+1)γ₁)/N − ζ(N+1)/x + 𝓑(1, N, x)
/// ```
pub fn check_thm21_k1(big_n: u32, x: Complex64) -> Result<IdentityReport> {
    if big_n == 0 {
        return gate("N must be a positive integer");
    }
    check_cut(x)?;
    let n = big_n as f64;
    let root = x.powf(1.0 / n);
    let s = jsum(big_n, |_| Complex64::new(1.0, 0.0), |j| ff(1.0, 1.0 / n, expi(-PI * j / n) / root))?;
    let lhs = ff(1.0, n, x)? + s * (1.0 / n);
    let l = x.ln();
    let g = EULER_GAMMA;
    let rhs = (PI * PI / 6.0 - (n - 1.0) * g * l + 0.5 * l * l - n * g * g - (n * n + 1.0) * STIELTJES_GAMMA1) / n
        - zeta_any(n + 1.0) / x
        + CorrectionB::new(1, big_n).value(x);
    Ok(IdentityReport::new("thm21_k1", params!("N" => big_n, "x" => x), lhs, Val::exact(rhs), DEFAULT_TOLERANCE))
}

fn check_odd(k: u32, big_n: u32) -> Result<()> {
    if k % 2 == 0 || big_n % 2 == 0 || k == 0 || big_n == 0 {
        return gate(format!("needs odd natural k and N, got k = {k}, N = {big_n}"));
    }
    Ok(())
}

/// Σ'' w(j) {𝓕_{k',1/N}(i w e_j) + 𝓕_{k',1/N}(−i w e_j)} with w = (2π/x)^{1/N},
/// e_j = e^{iπj/(2N)}.
fn rotated_pair_sum(k_prime: f64, big_n: u32, x: Complex64, weight: impl Fn(f64) -> Complex64 + Sync) -> Result<Val> {
    let n = big_n as f64;
    let w = (2.0 * PI / x).powf(1.0 / n);
    let i = Complex64::i();
    jsum(big_n, weight, |j| {
        let e = expi(PI * j / (2.0 * n));
        Ok(ff(k_prime, 1.0 / n, i * w * e)? + ff(k_prime, 1.0 / n, -i * w * e)?)
    })
}

/// 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π)
fn pair(k: f64, n: f64, x: Complex64) -> Result<Val> {
    let y = Complex64::i() * x / (2.0 * PI);
    Ok(ff(k, n, y)? + ff(k, n, -y)?)
}

/// Both sides of the odd-parity transformation for k ≥ 3:
///
/// ```text
/// Σ'' e^{−iπ(k−1)j/(2N)} {𝓕_{k',1/N}(i w e_j) + 𝓕_{k',1/N}(−i w e_j)}
///   = (−1)^{(k+1)/2} N (2π/x)^{(k−1)/N} {𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π)
///     + 2((γ − log(2π/x)) ζ(k) − N ζ'(k)) + 𝓒(k, N, x)}
/// ```
fn thm22_sides(k: u32, big_n: u32, x: Complex64) -> Result<(Val, Val, Complex64)> {
    check_odd(k, big_n)?;
    if k < 3 {
        return gate("k = 1 is the triple-pole case");
    }
    require_right_half(x)?;
    let (kf, n) = (k as f64, big_n as f64);
    let kp = (n + kf - 1.0) / n;
    let lhs = rotated_pair_sum(kp, big_n, x, |j| expi(-PI * (kf - 1.0) * j / (2.0 * n)))?;
    let cterm = CorrectionC::new(k, big_n)?.value(x)?;
    let extra = 2.0 * ((EULER_GAMMA - (2.0 * PI / x).ln()) * zeta_any(kf) - n * zeta_deriv(kf)?) + cterm;
    let sign = if ((k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let pre = sign * n * (2.0 * PI / x).powf((kf - 1.0) / n);
    let rhs = (pair(kf, n, x)? + Val::exact(extra)) * pre;
    Ok((lhs, rhs, pre))
}

/// Odd-parity transformation of 𝓕_{k,N} (k, N odd, k ≥ 3, Re x > 0).
pub fn check_thm22(k: u32, big_n: u32, x: Complex64) -> Result<IdentityReport> {
    let (lhs, rhs, _) = thm22_sides(k, big_n, x)?;
    let branch = CorrectionC::new(k, big_n)?.branch;
    let note = match branch {
        CorrectionBranch::Resonant => "resonant branch of C(k, N, x), with N·γ in the logarithmic bracket",
        _ => "generic branch of C(k, N, x)",
    };
    Ok(IdentityReport::new("thm22", params!("k" => k, "N" => big_n, "x" => x), lhs, rhs, DEFAULT_TOLERANCE).with_note(note))
}

/// The k = 1 (triple pole) transformation, N odd, Re x > 0:
///
/// ```text
/// Σ'' {𝓕_{1,1/N}(i w e_j) + 𝓕_{1,1/N}(−i w e_j)} = −N {𝓕_{1,N}(ix/2π) + 𝓕_{1,N}(−ix/2π)
///   − (1/N)(π²/12 − 2Nγ² + 2(N−1)γ log(2π/x) + log²(2π) − log(4π²/x) log x − 2(N²+1)γ₁)}
/// ```
pub fn check_thm23(big_n: u32, x: Complex64) -> Result<IdentityReport> {
    check_odd(1, big_n)?;
    require_right_half(x)?;
    let n = big_n as f64;
    let lhs = rotated_pair_sum(1.0, big_n, x, |_| Complex64::new(1.0, 0.0))?;
    let g = EULER_GAMMA;
    let l2p = (2.0 * PI).ln();
    let bracket = PI * PI / 12.0 - 2.0 * n * g * g + 2.0 * (n - 1.0) * g * (2.0 * PI / x).ln() + l2p * l2p
        - (4.0 * PI * PI / x).ln() * x.ln()
        - 2.0 * (n * n + 1.0) * STIELTJES_GAMMA1;
    let rhs = (pair(1.0, n, x)? - Val::exact(bracket / n)) * (-n);
    Ok(IdentityReport::new("thm23", params!("N" => big_n, "x" => x), lhs, rhs, DEFAULT_TOLERANCE)
        .with_note("every j carries weight 1 in the rotated sum"))
}

/// For odd 1 < k ≤ N the odd-parity transformation at x follows from the
/// k ≤ N functional equation at ±ix/2π. The residual of the former must equal
/// −(−1)^{(k+1)/2} N (2π/x)^{(k−1)/N} Σ_± y^{(k−1)/N} r(y), where r(y) is the
/// residual of the latter at y = ±ix/2π. Reports the two residuals as lhs and rhs.
pub fn check_equivalence(k: u32, big_n: u32, x: Complex64) -> Result<IdentityReport> {
    check_odd(k, big_n)?;
    if !(1 < k && k <= big_n) {
        return gate(format!("needs odd 1 < k ≤ N, got k = {k}, N = {big_n}"));
    }
    let (l22, r22, pre) = thm22_sides(k, big_n, x)?;
    let kf = k as f64;
    let n = big_n as f64;
    let y = Complex64::i() * x / (2.0 * PI);
    let mut comb = Val::zero();
    for yy in [y, -y] {
        let (l, r) = thm21_sides(k, big_n, yy)?;
        comb = comb + (l - r) * yy.powf((kf - 1.0) / n);
    }
    let lhs = l22 - r22;
    let rhs = comb * (-pre);
    Ok(IdentityReport::new("equivalence", params!("k" => k, "N" => big_n, "x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

/// Σ n^{−2m−1}(ψ(ina/2π) + ψ(−ina/2π)) = 𝓕_{2m+1,1}(y) + 𝓕_{2m+1,1}(−y) − 2ζ'(2m+1)
/// + ζ(2m+1)(log y + log(−y)) with y = ia/2π.
pub fn digamma_pair_sum(m: u32, a: Complex64) -> Result<Val> {
    let k = 2.0 * m as f64 + 1.0;
    let y = Complex64::i() * a / (2.0 * PI);
    let logs = -2.0 * zeta_deriv(k)? + zeta_any(k) * (y.ln() + (-y).ln());
    Ok(ff(k, 1.0, y)? + ff(k, 1.0, -y)? + Val::exact(logs))
}

fn check_alpha(alpha: Complex64) -> Result<Complex64> {
    let beta = 4.0 * PI * PI / alpha;
    if !(alpha.re > 0.0 && beta.re > 0.0) {
        return domain(format!("needs Re α > 0 and Re β > 0 with αβ = 4π², got α = {alpha}"));
    }
    Ok(beta)
}

/// α^{−m}{2γζ(2m+1) + S(α)} = −(−β)^{−m}{2γζ(2m+1) + S(β)}
/// − 2 Σ_{j=1}^{m−1} (−1)^j ζ(2m+1−2j) ζ(2j+1) α^{j−m} β^{−j}, αβ = 4π².
pub fn check_cor24(m: u32, alpha: Complex64) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a natural number");
    }
    let beta = check_alpha(alpha)?;
    let z = Val::real(2.0 * EULER_GAMMA * zeta_any(2.0 * m as f64 + 1.0));
    let mi = m as i32;
    let lhs = (z + digamma_pair_sum(m, alpha)?) * alpha.powi(-mi);
    let mut fin = Complex64::new(0.0, 0.0);
    for j in 1..m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let jf = j as f64;
        fin += sign * zeta_any(2.0 * m as f64 + 1.0 - 2.0 * jf) * zeta_any(2.0 * jf + 1.0) * alpha.powi(j as i32 - mi) * beta.powi(-(j as i32));
    }
    let rhs = (z + digamma_pair_sum(m, beta)?) * (-(-beta).powi(-mi)) - Val::exact(2.0 * fin);
    Ok(IdentityReport::new("cor24", params!("m" => m, "alpha" => alpha), lhs, rhs, DEFAULT_TOLERANCE))
}

/// Σ n^{−4m−1}(ψ(in) + ψ(−in)) = −2γζ(4m+1) − Σ_{j=1}^{2m−1} (−1)^j ζ(2j+1) ζ(4m+1−2j).
pub fn check_trans4m1(m: u32) -> Result<IdentityReport> {
    if m == 0 {
        return domain("m must be a natural number");
    }
    let lhs = digamma_pair_sum(2 * m, Complex64::new(2.0 * PI, 0.0))?;
    let k = 4.0 * m as f64 + 1.0;
    let mut rhs = -2.0 * EULER_GAMMA * zeta_any(k);
    for j in 1..2 * m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        rhs -= sign * zeta_any(2.0 * j as f64 + 1.0) * zeta_any(k - 2.0 * j as f64);
    }
    let report = IdentityReport::new("trans4m1", params!("m" => m), lhs, Val::real(rhs), DEFAULT_TOLERANCE);
    let im = lhs.v.im.abs();
    Ok(report.with_note(format!("imaginary part of the digamma sum: {im:.3e}")))
}

/// (1/α){2γζ(3) + S(α)} = (1/β){2γζ(3) + S(β)}, αβ = 4π², with
/// S(a) = Σ n^{−3}(ψ(ina/2π) + ψ(−ina/2π)).
pub fn check_modular(alpha: Complex64) -> Result<IdentityReport> {
    let beta = check_alpha(alpha)?;
    let z = Val::real(2.0 * EULER_GAMMA * zeta_any(3.0));
    let lhs = (z + digamma_pair_sum(1, alpha)?) * alpha.inv();
    let rhs = (z + digamma_pair_sum(1, beta)?) * beta.inv();
    // the form with ψ(−inα/2π) inside the β bracket
    let half = |a: Complex64| -> Result<Val> {
        let y = Complex64::i() * a / (2.0 * PI);
        Ok(ff(3.0, 1.0, y)? + Val::exact(zeta_any(3.0) * y.ln() - zeta_deriv(3.0)?))
    };
    let mixed = (z + half(beta)? + half(-alpha)?) * beta.inv();
    let off = (lhs.v - mixed.v).norm();
    Ok(IdentityReport::new("modular", params!("alpha" => alpha), lhs, rhs, DEFAULT_TOLERANCE).with_note(format!(
        "checked with psi(+-in beta/2pi) in the beta bracket; mixing in psi(-in alpha/2pi) there leaves residual {off:.3e}"
    )))
}
