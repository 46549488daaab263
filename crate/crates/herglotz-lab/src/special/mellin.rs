//! Small-argument expansions of the two exponential lattice sums
//!
//! ```text
//! Λ_{k,N}(y) = Σ_{n≥1} n^{−k} e^{−n^N y}            (Re y > 0)
//! L_{k,N}(t) = Σ_{n≥1} n^{−k} / (e^{2π n^N t} − 1)  (t > 0)
//! ```
//!
//! read off from the poles of their Mellin transforms Γ(w) ζ(k+Nw) and
//! Γ(w) ζ(w) ζ(k+Nw). For N = 1 the Λ expansion converges; otherwise both are
//! asymptotic and are only trusted while their terms keep decreasing below
//! the target. When the ζ pole w* = (1−k)/N lands on a Γ pole the pair merges
//! into a double pole with a logarithmic residue.

use super::digamma::digamma_real;
use super::gamma::{factorial, gamma};
use super::zeta::{zeta_any, zeta_deriv_any};
use super::EULER_GAMMA;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Result of a small-argument expansion: value and rounding/truncation estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Expansion {
    pub value: Complex64,
    pub err: f64,
}

const MAX_ORDER: usize = 400;

/// Index j0 with (1−k)/N = −j0, if any.
fn collision(k: f64, n: f64) -> Option<usize> {
    let w = (1.0 - k) / n;
    let j = (-w).round();
    if j >= 0.0 && (w + j).abs() < 1e-12 {
        Some(j as usize)
    } else {
        None
    }
}

/// Residue at a double pole w = −j0 of Γ(w) Z(w) ζ(k+Nw) X^{−w}, where
/// Z(w) = b0 + b1 (w + j0) + … is regular there and k − j0 N = 1.
fn double_pole_residue(j0: usize, b0: f64, b1: f64, n: f64, x: Complex64) -> Complex64 {
    let sign = if j0 % 2 == 0 { 1.0 } else { -1.0 };
    let a_m1 = sign / factorial(j0);
    let a_0 = a_m1 * digamma_real(j0 as f64 + 1.0).unwrap_or(f64::NAN);
    let c_m1 = 1.0 / n;
    let c_0 = EULER_GAMMA;
    let d0 = x.powf(j0 as f64);
    let d1 = -x.ln() * d0;
    a_m1 * c_m1 * (b0 * d1 + b1 * d0) + (a_m1 * c_0 + a_0 * c_m1) * b0 * d0
}

/// Sum a sequence of expansion terms, stopping once they are negligible.
/// Returns None if the terms start to grow before becoming negligible.
fn sum_terms(
    mut term: impl FnMut(usize) -> Complex64,
    leading: Complex64,
    tol_rel: f64,
) -> Option<Expansion> {
    let mut sum = leading;
    let mut biggest = leading.norm();
    let mut prev = f64::INFINITY;
    let mut small_run = 0;
    let mut zero_run = 0;
    for j in 0..MAX_ORDER {
        let t = term(j);
        let m = t.norm();
        if !m.is_finite() {
            return None;
        }
        sum += t;
        biggest = biggest.max(m);
        if m == 0.0 {
            zero_run += 1;
            if zero_run >= 40 {
                // only structurally zero terms remain: the expansion terminated
                return Some(Expansion { value: sum, err: 8.0 * f64::EPSILON * biggest });
            }
            continue;
        }
        zero_run = 0;
        let scale = sum.norm().max(1e-300);
        if m <= tol_rel * scale {
            small_run += 1;
            if small_run >= 2 {
                return Some(Expansion { value: sum, err: 8.0 * f64::EPSILON * biggest + m });
            }
        } else {
            small_run = 0;
            if m > prev && j > 4 {
                return None;
            }
        }
        prev = m;
    }
    None
}

/// Small-y expansion of Λ_{k,N}(y).
pub(crate) fn lattice_exp_small(k: f64, n: f64, y: Complex64) -> Option<Expansion> {
    let col = collision(k, n);
    let leading = match col {
        Some(_) => Complex64::new(0.0, 0.0),
        None => gamma((1.0 - k) / n) / n * y.powf((k - 1.0) / n),
    };
    let term = |j: usize| -> Complex64 {
        if Some(j) == col {
            return double_pole_residue(j, 1.0, 0.0, n, y);
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let z = zeta_any(k - j as f64 * n);
        if z == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        sign * z / factorial(j) * y.powi(j as i32)
    };
    sum_terms(term, leading, 1e-17)
}

/// Small-t expansion of L_{k,N}(t).
pub(crate) fn lambert_kernel_small(k: f64, n: f64, t: f64) -> Option<Expansion> {
    let x = Complex64::new(2.0 * PI * t, 0.0);
    let col = collision(k, n);
    let mut leading = zeta_any(k + n) / x;
    if col.is_none() {
        let w = (1.0 - k) / n;
        leading += gamma(w) * zeta_any(w) / n * x.powf(-w);
    }
    let term = |j: usize| -> Complex64 {
        if Some(j) == col {
            let jf = -(j as f64);
            return double_pole_residue(j, zeta_any(jf), zeta_deriv_any(jf), n, x);
        }
        let zj = zeta_any(-(j as f64));
        if zj == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let z = zeta_any(k - j as f64 * n);
        sign * zj * z / factorial(j) * x.powi(j as i32)
    };
    sum_terms(term, leading, 1e-17)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice_direct(k: f64, n: f64, y: Complex64) -> Complex64 {
        (1..200_000)
            .map(|m| {
                let mf = m as f64;
                mf.powf(-k) * (-(mf.powf(n)) * y).exp()
            })
            .sum()
    }

    fn kernel_direct(k: f64, n: f64, t: f64) -> f64 {
        (1..200_000).map(|m| (m as f64).powf(-k) / (2.0 * PI * (m as f64).powf(n) * t).exp_m1()).sum()
    }

    #[test]
    fn lattice_matches_direct_sum() {
        let cases = [
            (2.0, 1.0, Complex64::new(0.3, 0.1)),
            (1.0, 1.0, Complex64::new(0.2, 0.0)),
            (3.0, 1.0, Complex64::new(0.5, -0.2)),
            (2.0, 2.0, Complex64::new(0.05, 0.02)),
            (1.0, 3.0, Complex64::new(0.004, 0.0)),
            (2.0, 3.0, Complex64::new(0.003, 0.001)),
            (1.5, 1.5, Complex64::new(0.02, 0.0)),
        ];
        for (k, n, y) in cases {
            let e = lattice_exp_small(k, n, y).unwrap_or_else(|| panic!("rejected k={k} N={n} y={y}"));
            let d = lattice_direct(k, n, y);
            assert!((e.value - d).norm() < 1e-12, "k={k} N={n} y={y}: {} vs {d}", e.value);
        }
    }

    #[test]
    fn kernel_matches_direct_sum() {
        for (k, n, t) in [(1.0, 1.0, 0.05), (2.0, 1.0, 0.1), (3.0, 1.0, 0.08), (2.0, 2.0, 0.01), (2.0, 3.0, 0.002), (1.0, 3.0, 0.003)] {
            let e = lambert_kernel_small(k, n, t).unwrap_or_else(|| panic!("rejected k={k} N={n} t={t}"));
            let d = kernel_direct(k, n, t);
            assert!((e.value.re - d).abs() < 1e-11 * d.abs().max(1.0), "k={k} N={n} t={t}: {} vs {d}", e.value);
        }
    }
}
