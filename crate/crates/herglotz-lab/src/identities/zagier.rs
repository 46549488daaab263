//! Functional equations of F and F_k.

use super::report::{IdentityReport, DEFAULT_TOLERANCE};
use super::val::Val;
use crate::error::{domain, Result};
use crate::herglotz::{check_cut, herglotz_f, higher_f_k};
use crate::params;
use crate::special::{double_zeta, polylog, zeta_any, EULER_GAMMA, STIELTJES_GAMMA1};
use num_complex::Complex64;
use std::f64::consts::PI;

fn f(x: Complex64) -> Result<Val> {
    Ok(herglotz_f(x)?.into())
}

fn fk(k: u32, x: Complex64) -> Result<Val> {
    Ok(higher_f_k(k, x)?.into())
}

/// F(1) = −γ²/2 − π²/12 − γ₁.
pub fn f_at_one() -> f64 {
    -0.5 * EULER_GAMMA * EULER_GAMMA - PI * PI / 12.0 - STIELTJES_GAMMA1
}

/// F(x) − F(x+1) − F(x/(x+1)) = −F(1) + Li₂(1/(1+x)).
pub fn check_zagier_fe1(x: Complex64) -> Result<IdentityReport> {
    check_cut(x)?;
    let one = Complex64::new(1.0, 0.0);
    let lhs = f(x)? - f(x + one)? - f(x / (x + one))?;
    let li = polylog(2.0, (one + x).inv())?;
    let rhs = Val::real(-f_at_one()) + Val::exact(li);
    Ok(IdentityReport::new("fe1", params!("x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

/// F(x) + F(1/x) = 2F(1) + ½log²x − π²(x−1)²/(6x).
pub fn check_zagier_fe2(x: Complex64) -> Result<IdentityReport> {
    check_cut(x)?;
    let lhs = f(x)? + f(x.inv())?;
    let l = x.ln();
    let one = Complex64::new(1.0, 0.0);
    let rhs = Val::real(2.0 * f_at_one()) + Val::exact(0.5 * l * l - PI * PI / 6.0 * (x - one) * (x - one) / x);
    Ok(IdentityReport::new("fe2", params!("x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return domain(format!("the F_k relations need integer k ≥ 2, got {k}"));
    }
    Ok(())
}

/// F_k(x) + (−x)^{k−1} F_k(1/x) = −γζ(k)(1 + (−x)^{k−1}) − Σ_{r=2}^{k−1} ζ(r)ζ(k+1−r)(−x)^{r−1}
/// + ζ(k+1)((−x)^k − 1/x).
pub fn check_vz1(k: u32, x: Complex64) -> Result<IdentityReport> {
    check_k(k)?;
    check_cut(x)?;
    let kf = k as f64;
    let mx = -x;
    let p = |e: u32| mx.powi(e as i32);
    let lhs = fk(k, x)? + fk(k, x.inv())? * p(k - 1);
    let mut rhs = -EULER_GAMMA * zeta_any(kf) * (1.0 + p(k - 1));
    for r in 2..k {
        rhs -= zeta_any(r as f64) * zeta_any((k + 1 - r) as f64) * p(r - 1);
    }
    rhs += zeta_any(kf + 1.0) * (p(k) - x.inv());
    Ok(IdentityReport::new("vz1", params!("k" => k, "x" => x), lhs, Val::exact(rhs), DEFAULT_TOLERANCE))
}

/// F_k(x) − F_k(x+1) + (−x)^{k−1} F_k((x+1)/x) = (−x)^{k−1}(ζ(k,1) + ζ(k+1) − γζ(k))
/// − Σ_{r=1}^{k−1} ζ(k+1−r, r)(−x)^{r−1} + ζ(k+1)((−x)^k/(x+1) − 1/x).
pub fn check_vz2(k: u32, x: Complex64) -> Result<IdentityReport> {
    check_k(k)?;
    check_cut(x)?;
    let kf = k as f64;
    let one = Complex64::new(1.0, 0.0);
    let mx = -x;
    let p = |e: u32| mx.powi(e as i32);
    let lhs = fk(k, x)? - fk(k, x + one)? + fk(k, (x + one) / x)? * p(k - 1);
    let mut rhs = p(k - 1) * (double_zeta(k, 1)? + zeta_any(kf + 1.0) - EULER_GAMMA * zeta_any(kf));
    for r in 1..k {
        rhs -= double_zeta(k + 1 - r, r)? * p(r - 1);
    }
    rhs += zeta_any(kf + 1.0) * (p(k) / (x + one) - x.inv());
    // double zeta values carry a 1e-13 error budget
    let rhs = Val::with_err(rhs, 1e-13 * (1.0 + x.norm()).powi(k as i32) + 4.0 * f64::EPSILON * rhs.norm());
    Ok(IdentityReport::new("vz2", params!("k" => k, "x" => x), lhs, rhs, DEFAULT_TOLERANCE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fe1_and_fe2() {
        for x in [c(1.0, 0.0), c(2.6, 0.0), c(0.5, 1.5)] {
            let r = check_zagier_fe1(x).unwrap();
            assert!(r.pass && r.abs_residual < 1e-11, "{r:?}");
        }
        let r = check_zagier_fe2(c(1.0, 0.0)).unwrap();
        assert!(r.abs_residual < 1e-13);
        let r = check_zagier_fe2(c(3.0, 0.0)).unwrap();
        assert!(r.pass && r.abs_residual < 1e-11, "{r:?}");
        assert!(check_zagier_fe2(c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn vz_relations() {
        for (k, x) in [(3, c(2.0, 0.0)), (2, c(1.0, 0.0)), (4, c(1.0, 1.0))] {
            let r = check_vz1(k, x).unwrap();
            assert!(r.pass && r.abs_residual < 1e-11, "{r:?}");
        }
        for (k, x) in [(3, c(1.0, 0.0)), (2, c(2.0, 0.0)), (3, c(0.8, 0.0))] {
            let r = check_vz2(k, x).unwrap();
            assert!(r.pass && r.abs_residual < 1e-10, "{r:?}");
        }
        assert!(check_vz1(1, c(1.0, 0.0)).is_err());
    }
}
