use herglotz_lab::quadrature::{check_cor210, check_cor29, check_thm28, j_integral, j_kn};
use std::f64::consts::PI;

fn main() -> herglotz_lab::Result<()> {
    let j = j_integral(0.4)?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let closed = 11.0 * PI * PI / 240.0 + 0.75 * 2f64.ln().powi(2) - 2.0 * phi.ln().powi(2);
    println!("J(0.4) = {:.15} vs closed form {:.15}", j.value.re, closed);
    println!("J_{{2,3}}(1) = {:.15} ({} panels)", j_kn(2, 3, 1.0)?.value.re, j_kn(2, 3, 1.0)?.panels);

    for r in [check_thm28(2, 3, 0.7)?, check_cor29(3, 1.3)?, check_cor210(5)?] {
        println!("{:<7} residual {:.2e} pass {}", r.identity, r.abs_residual, r.pass);
    }
    Ok(())
}
