//! Generalized Lambert series and their transformations under alpha beta^N = pi^(N+1).

use herglotz_lab::lambert::{
    check_companion, check_ramanujan, check_thm211, check_thm212, check_zetagen_a, dual_beta, lambert_sum, LambertSpec,
};
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() -> herglotz_lab::Result<()> {
    let alpha = Complex64::new(PI, 0.0);
    // sum n^{-3} / (e^{2 pi n} - 1)
    let s = lambert_sum(LambertSpec::new(-3.0, 1, alpha)?, 1e-16)?;
    println!("lambert(p=-3, N=1, alpha=pi) = {:.16e} (+/- {:.1e})", s.value.re, s.abs_err);
    println!("beta for alpha = 2, N = 3: {}", dual_beta(Complex64::new(2.0, 0.0), 3)?);

    // Ramanujan's formula is symmetric under m -> -m, alpha -> beta
    for m in [1, 2, -1] {
        let r = check_ramanujan(m, alpha)?;
        println!("ramanujan m={m:<2}   residual {:.2e}", r.abs_residual);
    }
    let more = [
        check_companion(1, Complex64::new(1.5, 0.0))?,
        check_thm211(1, 3, Complex64::new(0.8, 0.0))?,
        check_thm212(3, Complex64::new(2.0, 0.0))?,
        check_zetagen_a(1.0 / 3.0, 1, 3, Complex64::new(2.0, 0.0))?,
    ];
    for r in more {
        println!("{:<10} residual {:.2e} pass {}", r.identity, r.abs_residual, r.pass);
    }
    Ok(())
}
