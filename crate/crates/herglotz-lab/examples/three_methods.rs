//! F_{k,N}(x) three ways: the lattice series, the integral kernel and the
//! Binet/Lambert route. Agreement within the combined error estimates is the
//! strongest internal check the library has.

use herglotz_lab::herglotz::{ext_f, ext_f_via_binet, ext_f_via_integral, HerglotzParams};
use num_complex::Complex64;

fn main() -> herglotz_lab::Result<()> {
    let points = [(1.0, 1.0, Complex64::new(1.0, 0.0)), (2.0, 3.0, Complex64::new(0.7, 0.0)), (1.5, 0.5, Complex64::new(2.0, 1.0))];
    for (k, n, x) in points {
        let p = HerglotzParams::new(k, n)?;
        let outs = [ext_f(p, x, 1e-12)?, ext_f_via_integral(p, x, 1e-12)?, ext_f_via_binet(p, x, 1e-12)?];
        println!("k={k} N={n} x={x}");
        for o in &outs {
            println!("  {:<16} {:.15}  +/- {:.1e}", o.method.as_str(), o.value, o.abs_err);
        }
        let gap = outs.iter().flat_map(|a| outs.iter().map(move |b| (a.value - b.value).norm())).fold(0.0, f64::max);
        println!("  max gap {gap:.1e}");
    }
    Ok(())
}
