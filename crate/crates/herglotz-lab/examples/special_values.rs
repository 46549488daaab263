//! Special functions underneath everything else: digamma, zeta values,
//! Bernoulli numbers and (generalized) polylogarithms.

use herglotz_lab::special::{
    bernoulli_number, digamma, double_zeta, gen_polylog, polylog, riemann_zeta, riemann_zeta_deriv, stieltjes_gamma1,
};
use num_complex::Complex64;

fn main() -> herglotz_lab::Result<()> {
    println!("psi(1)        = {}", digamma(Complex64::new(1.0, 0.0))?);
    println!("psi(1/2 + 2i) = {}", digamma(Complex64::new(0.5, 2.0))?);
    for s in [2.0, 3.0, 5.0] {
        println!("zeta({s})      = {:.16}", riemann_zeta(s)?);
    }
    println!("zeta'(2)      = {:.16}", riemann_zeta_deriv(2.0)?);
    println!("gamma_1       = {:.16}", stieltjes_gamma1());
    println!("zeta(2,1)     = {:.16}", double_zeta(2, 1)?);
    for n in [2, 4, 12, 30] {
        println!("B_{n:<2}          = {:e}", bernoulli_number(n));
    }
    let t = Complex64::new(0.5, 0.0);
    println!("Li_2(1/2)     = {}", polylog(2.0, t)?);
    println!("Li_2^(3)(1/2) = {}", gen_polylog(3, 2.0, t)?);
    Ok(())
}
