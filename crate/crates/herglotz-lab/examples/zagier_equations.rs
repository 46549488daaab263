//! Functional equations of the Herglotz function and of its higher analogues.

use herglotz_lab::herglotz::{herglotz_f, higher_f_k};
use herglotz_lab::identities::{check_vz1, check_vz2, check_zagier_fe1, check_zagier_fe2, IdentityReport};
use num_complex::Complex64;

fn show(r: &IdentityReport) {
    println!("{:<4} residual {:.2e}  tolerance {:.1e}  {}", r.identity, r.abs_residual, r.tolerance, if r.pass { "ok" } else { "FAIL" });
}

fn main() -> herglotz_lab::Result<()> {
    let f1 = herglotz_f(Complex64::new(1.0, 0.0))?;
    println!("F(1) = {:.16} (+/- {:.1e}, {} terms)", f1.value.re, f1.abs_err, f1.terms_used);
    println!("F_3(2) = {:.16}", higher_f_k(3, Complex64::new(2.0, 0.0))?.value.re);

    for x in [0.5, 2.0].map(|t| Complex64::new(t, 0.0)).into_iter().chain([Complex64::new(0.5, 1.5)]) {
        show(&check_zagier_fe1(x)?);
        show(&check_zagier_fe2(x)?);
    }
    for k in [2, 3, 4] {
        let x = Complex64::new(1.0, 1.0);
        show(&check_vz1(k, x)?);
        show(&check_vz2(k, x)?);
    }
    Ok(())
}
