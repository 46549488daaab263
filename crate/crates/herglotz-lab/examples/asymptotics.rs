//! Asymptotic expansions against direct evaluation. Each row carries the
//! optimal-truncation error bound; `within_bound` says whether it held.

use herglotz_lab::asym::{asym_row, AsymParams, AsymTarget};
use num_complex::Complex64;

fn table(target: AsymTarget, p: AsymParams, xs: &[f64]) -> herglotz_lab::Result<()> {
    println!("{target} k={} N={} m={}", p.k, p.big_n, p.m);
    for &x in xs {
        let row = asym_row(target, p, Complex64::new(x, 0.0))?;
        println!("  x={x:<8} diff {:.2e}  bound {:.2e}  {}", row.abs_diff, row.bound, row.within_bound());
    }
    Ok(())
}

fn main() -> herglotz_lab::Result<()> {
    let p = |k: f64, big_n: f64, m: u32| AsymParams { k, big_n, m, terms: 30 };
    table(AsymTarget::FkNInf, p(2.0, 3.0, 1), &[20.0, 40.0, 80.0])?;
    table(AsymTarget::FkNZero, p(1.0, 1.0, 1), &[0.04, 0.02])?;
    table(AsymTarget::PairInf, p(3.0, 1.0, 1), &[30.0, 60.0])?;
    table(AsymTarget::PairZero, p(3.0, 3.0, 1), &[0.004, 0.002])?;
    table(AsymTarget::Lambert, p(1.0, 1.0, 1), &[0.2, 0.1])?;

    // a fixed short truncation shows the algebraic rate instead
    let short = AsymParams { terms: 2, ..p(2.0, 3.0, 1) };
    table(AsymTarget::FkNInf, short, &[20.0, 40.0, 80.0])?;
    Ok(())
}
