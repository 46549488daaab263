//! Adaptive integration and the singular J-integrals.

mod gk;
mod jint;

pub use gk::{integrate, integrate_breaks, QuadResult};
pub use jint::{check_cor210, check_cor29, check_thm28, j_integral, j_kn, j_kn_kernel, j_kn_with, JConfig};

use crate::error::Result;
use num_complex::Complex64;

/// Panel budget shared by the interval integrators.
pub const MAX_PANELS: usize = 20_000;

/// How [`integrate_01`] treats the ends of [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndpointPolicy {
    /// Plain adaptive quadrature.
    None,
    /// Map u = exp(−s/(1−s)), which turns integrable log- and power-type
    /// behaviour at u = 0 into a smooth integrand on s ∈ [0, 1).
    LogSub0,
    /// As `LogSub0`, and split at 1 − δ so that an integrand which switches to a
    /// series for its cancelling terms near u = 1 is never sampled across the switch.
    Cancel1 { delta: f64 },
}

/// ∫₀¹ f(u) du under the given endpoint policy.
pub fn integrate_01<F>(f: F, tol: f64, policy: EndpointPolicy) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    match policy {
        EndpointPolicy::None => integrate(f, 0.0, 1.0, tol, MAX_PANELS),
        EndpointPolicy::LogSub0 => log_sub(&f, 1.0, tol),
        EndpointPolicy::Cancel1 { delta } => {
            let c = 1.0 - delta;
            let head = log_sub(&f, c, 0.5 * tol)?;
            let tail = integrate(&f, c, 1.0, 0.5 * tol, MAX_PANELS)?;
            Ok(QuadResult {
                value: head.value + tail.value,
                abs_err: head.abs_err + tail.abs_err,
                panels: head.panels + tail.panels,
            })
        }
    }
}

/// ∫₀^c f(u) du with u = c·exp(−s/(1−s)).
fn log_sub<F>(f: &F, c: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let g = |s: f64| -> Result<Complex64> {
        let v = s / (1.0 - s);
        let u = c * (-v).exp();
        // below the smallest normal number the mapped integrand is taken as 0;
        // integrands with mass there need to be rewritten in log u
        if u < 1e-300 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let j = u / ((1.0 - s) * (1.0 - s));
        Ok(f(u)? * j)
    };
    integrate_breaks(g, &[0.0, 0.25, 0.5, 0.75, 1.0], tol, MAX_PANELS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Result<Complex64> {
        move |x| Ok(Complex64::new(f(x), 0.0))
    }

    #[test]
    fn linear() {
        let r = integrate_01(re(|u| u), 1e-14, EndpointPolicy::None).unwrap();
        assert!((r.value.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn log_antiderivative() {
        let r = integrate_01(re(|t| (1.0 + t).ln() / (1.0 + t)), 1e-14, EndpointPolicy::None).unwrap();
        let l2 = 2f64.ln();
        assert!((r.value.re - 0.5 * l2 * l2).abs() < 1e-15);
    }

    #[test]
    fn integrable_endpoint_singularity() {
        // ∫₀¹ du / (√u (1 − log u)) against the substituted form ∫₀¹ 2 dw / (1 − 2 log w)
        let f = re(|u: f64| 1.0 / (u.sqrt() * (1.0 - u.ln())));
        let oracle = integrate_01(re(|w: f64| 2.0 / (1.0 - 2.0 * w.ln())), 1e-13, EndpointPolicy::None).unwrap();
        let r = integrate_01(&f, 1e-12, EndpointPolicy::LogSub0).unwrap();
        assert!((r.value - oracle.value).norm() < 1e-11, "{} vs {}", r.value, oracle.value);
        let r = integrate_01(&f, 1e-12, EndpointPolicy::Cancel1 { delta: 1e-3 }).unwrap();
        assert!((r.value - oracle.value).norm() < 1e-11, "{} vs {}", r.value, oracle.value);
    }
}
