//! Transformations of F_{k,N} for odd k and N, with the correction terms they
//! pick up, the digamma pair sums and the modular relation.

use herglotz_lab::identities::{
    check_cor24, check_equivalence, check_modular, check_thm21, check_thm21_k1, check_thm22, check_thm23,
    check_trans4m1, CorrectionC,
};
use num_complex::Complex64;
use std::f64::consts::PI;

fn main() -> herglotz_lab::Result<()> {
    let x = Complex64::new(1.3, 0.0);
    let reports = vec![
        check_thm21(3, 3, x)?,
        check_thm21(2, 2, Complex64::new(2.0, 1.0))?,
        check_thm21_k1(3, x)?,
        check_thm22(3, 1, x)?,
        check_thm22(5, 3, Complex64::new(1.0, 0.5))?,
        check_thm23(3, x)?,
        check_equivalence(3, 3, x)?,
        check_cor24(1, Complex64::new(2.0 * PI, 0.0))?,
        check_trans4m1(2)?,
        check_modular(Complex64::new(1.0, 1.0))?,
    ];
    for r in &reports {
        println!("{:<12} {:?} residual {:.2e} pass {}", r.identity, r.params, r.abs_residual, r.pass);
    }

    // the correction term changes shape with (k, N)
    for (k, n) in [(1, 3), (3, 1), (5, 3), (7, 3)] {
        println!("C_{{{k},{n}}} branch: {:?}", CorrectionC::branch_of(k, n));
    }
    Ok(())
}
