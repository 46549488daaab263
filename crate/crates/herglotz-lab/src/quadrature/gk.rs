//! Globally adaptive Gauss–Kronrod (7/15) integration of complex integrands.

use crate::error::{HerglotzError, Result};
use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of a quadrature: value, error estimate and number of panels used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_err: f64,
    pub panels: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err).then(other.a.total_cmp(&self.a))
    }
}

fn kronrod<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x)? + f(c + x)?;
        k += s * WGK[i];
        if i % 2 == 1 {
            g += s * WG[i / 2];
        }
    }
    let value = k * h;
    let diff = ((k - g) * h).norm();
    // QUADPACK-style scaling of the raw Gauss/Kronrod difference
    let err = if diff == 0.0 { 0.0 } else { diff.min(200.0 * diff * (200.0 * diff / value.norm().max(1e-300)).sqrt().min(1.0)) };
    let err = err.max(50.0 * f64::EPSILON * value.norm());
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(HerglotzError::NonConvergence(format!("non-finite integrand on [{a}, {b}]")));
    }
    Ok(Panel { a, b, value, err })
}

/// ∫_a^b f over finite [a, b], bisecting the worst panel until the summed
/// error estimate is below `tol` or `max_panels` is reached.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64, max_panels: usize) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    integrate_breaks(f, &[a, b], tol, max_panels)
}

/// Like [`integrate`] with the interval pre-split at the given ordered points.
pub fn integrate_breaks<F>(f: F, points: &[f64], tol: f64, max_panels: usize) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        if w[1] > w[0] {
            heap.push(kronrod(&f, w[0], w[1])?);
        }
    }
    loop {
        let total_err: f64 = heap.iter().map(|p| p.err).sum();
        if total_err <= tol {
            break;
        }
        if heap.len() >= max_panels {
            let value: Complex64 = heap.iter().map(|p| p.value).sum();
            return Err(HerglotzError::NonConvergence(format!(
                "quadrature error {total_err:.3e} above {tol:.3e} after {} panels (value {value})",
                heap.len()
            )));
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // interval cannot be split further in floating point
            heap.push(Panel { err: 0.0, ..worst });
            continue;
        }
        heap.push(kronrod(&f, worst.a, mid)?);
        heap.push(kronrod(&f, mid, worst.b)?);
    }
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let value = panels.iter().map(|p| p.value).sum();
    let abs_err = panels.iter().map(|p| p.err).sum();
    Ok(QuadResult { value, abs_err, panels: panels.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(f: impl Fn(f64) -> f64) -> impl Fn(f64) -> Result<Complex64> {
        move |x| Ok(Complex64::new(f(x), 0.0))
    }

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(re(|x| x.powi(20)), 0.0, 1.0, 1e-14, 10).unwrap();
        assert!((r.value.re - 1.0 / 21.0).abs() < 1e-15);
    }

    #[test]
    fn endpoint_singularity() {
        let r = integrate(re(|x| 1.0 / x.sqrt()), 0.0, 1.0, 1e-12, 2000).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-11, "{}", r.value);
    }

    #[test]
    fn oscillatory() {
        let r = integrate(re(|x| (50.0 * x).cos()), 0.0, PI_F, 1e-13, 500).unwrap();
        assert!(r.value.re.abs() < 1e-12);
    }

    const PI_F: f64 = std::f64::consts::PI;
}
