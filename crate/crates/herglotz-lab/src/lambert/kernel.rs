//! The Lambert kernel L_{k,N}(t) = Σ n^{−k} / (e^{2π n^N t} − 1) for t > 0.

use crate::error::{domain, HerglotzError, Result};
use crate::special::mellin::lambert_kernel_small;
use std::f64::consts::PI;

const DIRECT_LIMIT: f64 = 2_000.0;
const BUDGET: u64 = 50_000_000;

fn direct(k: f64, big_n: f64, t: f64, budget: u64) -> Option<f64> {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        let e = 2.0 * PI * nf.powf(big_n) * t;
        let term = nf.powf(-k) / e.exp_m1();
        let s = sum + term;
        comp += if sum.abs() >= term.abs() { (sum - s) + term } else { (term - s) + sum };
        sum = s;
        if (e > 1.0 && term <= 1e-18 * sum.abs()) || e > 745.0 {
            return Some(sum + comp);
        }
        if n >= budget {
            return None;
        }
        n += 1;
    }
}

/// L_{k,N}(t) with an error estimate. Direct summation when it needs at most
/// a few thousand terms, otherwise the small-t pole expansion.
pub fn lambert_kernel(k: f64, big_n: f64, t: f64) -> Result<(f64, f64)> {
    if !(t > 0.0) || !t.is_finite() {
        return domain(format!("Lambert kernel needs t > 0, got {t}"));
    }
    let need = (40.0 / (2.0 * PI * t)).powf(1.0 / big_n);
    if need <= DIRECT_LIMIT {
        if let Some(v) = direct(k, big_n, t, BUDGET) {
            return Ok((v, 4.0 * f64::EPSILON * v.abs()));
        }
    }
    if let Some(e) = lambert_kernel_small(k, big_n, t) {
        if e.err <= 1e-13 * e.value.norm().max(1.0) {
            return Ok((e.value.re, e.err));
        }
    }
    direct(k, big_n, t, BUDGET)
        .map(|v| (v, 4.0 * f64::EPSILON * v.abs()))
        .ok_or_else(|| HerglotzError::NonConvergence(format!("Lambert kernel k={k} N={big_n} t={t} needs too many terms")))
}
