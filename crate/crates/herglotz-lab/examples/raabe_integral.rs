use herglotz_lab::identities::{check_raabe, raabe_rhs};
use num_complex::Complex64;

fn main() -> herglotz_lab::Result<()> {
    for u in [Complex64::new(5.0, 0.0), Complex64::new(3.0, 2.0)] {
        let r = check_raabe(u)?;
        println!("u = {u}");
        println!("  integral    {:.15}  +/- {:.1e}", r.lhs_value(), r.lhs_err);
        println!("  closed form {:.15}", raabe_rhs(u)?);
        println!("  residual    {:.2e}", r.abs_residual);
    }
    Ok(())
}
