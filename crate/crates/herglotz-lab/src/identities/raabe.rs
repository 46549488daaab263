//! Raabe-type sum of cosine integrals:
//!
//! ```text
//! Σ_{m≥1} ∫₀^∞ t cos t / (t² + m²u²) dt = ½{log(u/2π) − ½(ψ(iu/2π) + ψ(−iu/2π))}
//! ```

use super::report::{IdentityReport, DEFAULT_TOLERANCE};
use super::val::Val;
use crate::error::{domain, Result};
use crate::params;
use crate::quadrature::integrate;
use crate::special::{digamma, zeta_tail};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Terms of the accelerated alternating tail.
const CVZ_TERMS: usize = 40;
const PANEL_TOL: f64 = 1e-14;

/// Cohen–Rodriguez Villegas–Zagier acceleration of Σ_{k≥0} (−1)^k a_k.
fn cvz(a: &[Complex64]) -> Complex64 {
    let n = a.len();
    let nf = n as f64;
    let mut d = (3.0 + 8f64.sqrt()).powf(nf);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = Complex64::new(0.0, 0.0);
    for (k, ak) in a.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * ak;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// ∫₀^∞ t cos t / (t² + a²) dt for Re(a²) not on the negative axis where t² + a²
/// could vanish. Integrated over the panels between zeros of cos t with the
/// alternating tail accelerated.
pub fn cosine_integral(a: Complex64) -> Result<Val> {
    let a2 = a * a;
    if a2.im == 0.0 && a2.re <= 0.0 {
        return domain(format!("t² + a² vanishes on the real axis for a = {a}"));
    }
    let f = |t: f64| -> Result<Complex64> { Ok(t * t.cos() / (t * t + a2)) };
    let panel = |n: usize| -> Result<(Complex64, f64)> {
        let lo = if n == 0 { 0.0 } else { (n as f64 - 0.5) * PI };
        let r = integrate(f, lo, (n as f64 + 0.5) * PI, PANEL_TOL, 200)?;
        Ok((r.value, r.abs_err))
    };
    let n0 = (2.0 * a.norm() / PI).ceil() as usize + 2;
    let mut head = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for n in 0..n0 {
        let (v, e) = panel(n)?;
        head += v;
        err += e;
    }
    let mut terms = Vec::with_capacity(CVZ_TERMS);
    for k in 0..CVZ_TERMS {
        let (v, e) = panel(n0 + k)?;
        // the sign of panel n is (−1)^n
        terms.push(if (n0 + k) % 2 == 0 { v } else { -v });
        err += e;
    }
    let sign = if n0 % 2 == 0 { 1.0 } else { -1.0 };
    let tail = sign * cvz(&terms);
    let coarse = sign * cvz(&terms[..CVZ_TERMS - 8]);
    err += (tail - coarse).norm() + 8.0 * f64::EPSILON * (head.norm() + tail.norm());
    Ok(Val { v: head + tail, e: err, terms: (n0 + CVZ_TERMS) as u64 })
}

/// ½{log(u/2π) − ½(ψ(iu/2π) + ψ(−iu/2π))}
pub fn raabe_rhs(u: Complex64) -> Result<Complex64> {
    let y = Complex64::i() * u / (2.0 * PI);
    Ok(0.5 * ((u / (2.0 * PI)).ln() - 0.5 * (digamma(y)? + digamma(-y)?)))
}

/// Evaluates the sum term by term up to M₀ with M₀|u| ≥ 60 and M₀ Re u ≥ 40.
/// Beyond M₀ each integral is replaced by its large-argument expansion
/// −Σ_j (2j+1)!/a^{2j+2}, so the tail is −Σ_j (2j+1)! u^{−2j−2} ζ_{>M₀}(2j+2).
pub fn check_raabe(u: Complex64) -> Result<IdentityReport> {
    if !(u.re > 0.0) || !u.im.is_finite() {
        return domain(format!("needs Re u > 0, got {u}"));
    }
    let m0 = (60.0 / u.norm()).max(40.0 / u.re).ceil().max(1.0) as u64;
    if m0 > 100_000 {
        return domain(format!("Re u = {} is too small for term-by-term evaluation", u.re));
    }
    let parts: Vec<Result<Val>> = (1..=m0).into_par_iter().map(|m| cosine_integral(u * m as f64)).collect();
    let mut lhs = Val::zero();
    for p in parts {
        lhs = lhs + p?;
    }
    let mut tail = Complex64::new(0.0, 0.0);
    let mut fact = 1.0;
    for j in 0..14 {
        let jf = j as f64;
        if j > 0 {
            fact *= (2.0 * jf) * (2.0 * jf + 1.0);
        }
        tail -= fact * u.powf(-(2.0 * jf + 2.0)) * zeta_tail(2.0 * jf + 2.0, m0);
    }
    let lhs = lhs + Val::with_err(tail, 1e-15 * tail.norm());
    let rhs = Val::exact(raabe_rhs(u)?);
    Ok(IdentityReport::new("raabe", params!("u" => u), lhs, rhs, DEFAULT_TOLERANCE)
        .with_note(format!("terms integrated directly: {m0}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cosine_integral_large_argument() {
        let a = 40.0;
        let v = cosine_integral(c(a, 0.0)).unwrap();
        let asym: f64 = -(0..8).map(|j| (1..=2 * j + 1).map(|i| i as f64).product::<f64>() / a.powi(2 * j as i32 + 2)).sum::<f64>();
        assert!((v.v.re - asym).abs() < 1e-12, "{} vs {asym}", v.v);
    }

    #[test]
    fn reference_values() {
        let cases = [
            (c(5.0, 0.0), c(-0.076_968_175_882_041_673_6, 0.0)),
            (c(2.0 * PI, 0.0), c(-0.047_325_160_311_238_488_6, 0.0)),
            (c(3.0, 2.0), c(-0.089_479_765_104_303_585_3, 0.153_150_028_636_631_653_8)),
        ];
        for (u, want) in cases {
            let r = check_raabe(u).unwrap();
            assert!((r.rhs_value() - want).norm() < 1e-14, "{u}: {:?}", r.rhs);
            assert!(r.pass && r.abs_residual < 1e-7, "{r:?}");
        }
        let r = raabe_rhs(c(7.5, 0.0)).unwrap();
        assert!(r.im.abs() < 1e-12);
    }
}
