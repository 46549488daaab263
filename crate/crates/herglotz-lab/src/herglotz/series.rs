//! Weighted digamma lattice sums
//!
//! ```text
//! S = Σ_{n≥1} χ(n) n^{−k} Σ_r w_r g(n^N z_r),     g(z) = ψ(z) − log z
//! ```
//!
//! summed directly up to n = M, with the remainder taken from the Stirling
//! expansion g(z) ~ −1/(2z) − Σ B_{2j}/(2j z^{2j}). Tail coefficients are
//! combined across the points before use, so a family of points whose
//! individual tails diverge can still converge as a whole.

use crate::error::{HerglotzError, Result};
use crate::special::{bernoulli_number, periodic_tail, psi_minus_log, zeta_tail, NeumaierC};
use num_complex::Complex64;
use rayon::prelude::*;

/// Largest head length tried before giving up.
const M_MAX: u64 = 1 << 25;
/// Factor by which the tail bound may exceed the request once M_MAX is reached.
const RELAXED: f64 = 1e4;
/// Largest Stirling order used in the tail.
const K_MAX: usize = 40;
const CHUNK: u64 = 4096;

/// Arithmetic weight χ(n) multiplying the n-th term.
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Unit,
    /// χ(n) = values[(n − 1) mod P]
    Periodic(Vec<f64>),
}

impl Weight {
    fn period(&self) -> u64 {
        match self {
            Weight::Unit => 1,
            Weight::Periodic(v) => v.len() as u64,
        }
    }

    fn at(&self, n: u64) -> f64 {
        match self {
            Weight::Unit => 1.0,
            Weight::Periodic(v) => v[((n - 1) % v.len() as u64) as usize],
        }
    }

    fn max_abs(&self) -> f64 {
        match self {
            Weight::Unit => 1.0,
            Weight::Periodic(v) => v.iter().fold(0.0, |m, x| m.max(x.abs())),
        }
    }

    /// Σ_{n>m} χ(n) n^{−s}
    fn tail(&self, s: f64, m: u64) -> f64 {
        match self {
            Weight::Unit => zeta_tail(s, m),
            Weight::Periodic(v) => periodic_tail(s, v, m),
        }
    }
}

/// A lattice sum to evaluate; `points` holds the pairs (w_r, z_r).
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSum {
    pub k: f64,
    pub big_n: f64,
    pub weight: Weight,
    pub points: Vec<(Complex64, Complex64)>,
}

/// Value of a lattice sum with its error estimate and head length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeValue {
    pub value: Complex64,
    pub abs_err: f64,
    pub terms: u64,
}

struct Plan {
    m: u64,
    order: usize,
    bound: f64,
}

impl LatticeSum {
    pub fn new(k: f64, big_n: f64, weight: Weight, points: Vec<(Complex64, Complex64)>) -> Self {
        Self { k, big_n, weight, points }
    }

    /// Single-point sum Σ n^{−k} g(n^N z).
    pub fn single(k: f64, big_n: f64, z: Complex64) -> Self {
        Self::new(k, big_n, Weight::Unit, vec![(Complex64::new(1.0, 0.0), z)])
    }

    fn validate(&self) -> Result<()> {
        if self.points.is_empty() {
            return Err(HerglotzError::Domain("lattice sum without points".into()));
        }
        if !(self.big_n > 0.0) || !self.k.is_finite() || !self.big_n.is_finite() {
            return Err(HerglotzError::Domain(format!("lattice sum needs N > 0, got k = {}, N = {}", self.k, self.big_n)));
        }
        if let Weight::Periodic(v) = &self.weight {
            if v.is_empty() {
                return Err(HerglotzError::Domain("empty periodic weight".into()));
            }
        }
        for &(_, z) in &self.points {
            if !(z.re.is_finite() && z.im.is_finite()) || (z.im == 0.0 && z.re <= 0.0) {
                return Err(HerglotzError::Domain(format!("point {z} lies on the cut (−∞, 0]")));
            }
        }
        Ok(())
    }

    /// Combined coefficient A_m of n^{−mN} in the tail and the size of the
    /// individual contributions it was formed from.
    fn tail_coefficient(&self, m: usize) -> (Complex64, f64) {
        let c = match m {
            1 => -0.5,
            _ if m % 2 == 1 => return (Complex64::new(0.0, 0.0), 0.0),
            _ => -bernoulli_number(m) / m as f64,
        };
        let mut a = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for &(w, z) in &self.points {
            let t = w * c * z.powi(-(m as i32));
            a += t;
            scale += t.norm();
        }
        (a, scale)
    }

    fn structurally_zero(&self, m: usize) -> bool {
        let (a, scale) = self.tail_coefficient(m);
        a.norm() <= 1e-13 * scale
    }

    /// Stirling remainder bound after the B_{2K} term, summed over n > m.
    fn remainder_bound(&self, m: u64, order: usize) -> Option<f64> {
        let p = 2 * order + 2;
        let s = self.k + p as f64 * self.big_n;
        if s <= 1.0 {
            return None;
        }
        let b = bernoulli_number(p).abs() / p as f64;
        let mut per_point = 0.0;
        for &(w, z) in &self.points {
            let eff = z.norm() * (0.5 * z.arg()).cos();
            per_point += w.norm() * b * eff.powi(-(p as i32));
        }
        Some(per_point * self.weight.max_abs() * zeta_tail(s, m))
    }

    /// Is the tail through order K summable (every nonzero A_m with k + mN > 1)?
    fn order_admissible(&self, order: usize) -> Result<bool> {
        for m in std::iter::once(1).chain((1..=order).map(|j| 2 * j)) {
            let (a, scale) = self.tail_coefficient(m);
            let s = self.k + m as f64 * self.big_n;
            if s <= 1.0 && a.norm() > 1e-13 * scale {
                if m == 1 || order == 0 {
                    return Err(HerglotzError::Divergent(format!(
                        "lattice sum diverges: tail term n^(-{s}) has nonzero coefficient {a}"
                    )));
                }
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn plan(&self, tol: f64) -> Result<Plan> {
        let p = self.weight.period();
        let mut m = 64u64.div_ceil(p) * p;
        // the m = 1 tail term must be summable on its own
        self.order_admissible(0)?;
        loop {
            let mut best: Option<(f64, usize)> = None;
            for order in 0..=K_MAX {
                if !self.order_admissible(order)? {
                    break;
                }
                // when the combined coefficients after this order vanish, the
                // remainder equals the remainder after the last vanishing one
                let mut last = order;
                while last < K_MAX && self.structurally_zero(2 * last + 2) {
                    last += 1;
                }
                let bound = (order..=last).filter_map(|o| self.remainder_bound(m, o)).filter(|e| e.is_finite()).reduce(f64::min);
                if let Some(e) = bound {
                    if best.map_or(true, |(b, _)| e < b) {
                        best = Some((e, order));
                    }
                }
            }
            if let Some((bound, order)) = best {
                if bound <= 0.1 * tol {
                    return Ok(Plan { m, order, bound });
                }
            }
            if m >= M_MAX {
                // settle for the bound reached when it is close to the request;
                // it is reported as the error estimate
                if let Some((bound, order)) = best.filter(|b| b.0 <= RELAXED * tol) {
                    return Ok(Plan { m, order, bound });
                }
                return Err(HerglotzError::NonConvergence(format!(
                    "lattice sum tail bound {:.3e} above {tol:.3e} at M = {m}",
                    best.map_or(f64::INFINITY, |b| b.0)
                )));
            }
            m *= 2;
        }
    }

    fn head(&self, m: u64) -> Result<(Complex64, f64)> {
        let chunks: Vec<(u64, u64)> = (0..m.div_ceil(CHUNK)).map(|c| (c * CHUNK + 1, ((c + 1) * CHUNK).min(m))).collect();
        let partial: Vec<Result<(NeumaierC, f64)>> = chunks
            .par_iter()
            .map(|&(lo, hi)| {
                let mut acc = NeumaierC::default();
                let mut mag = 0.0;
                for n in lo..=hi {
                    let chi = self.weight.at(n);
                    if chi == 0.0 {
                        continue;
                    }
                    let ln_n = (n as f64).ln();
                    let scale = (self.big_n * ln_n).exp();
                    let pre = chi * (-self.k * ln_n).exp();
                    for &(w, z) in &self.points {
                        let zz = z * scale;
                        let g = psi_minus_log(zz)?;
                        let t = w * g * pre;
                        acc.add(t);
                        let e = (w.norm() * pre.abs()) * (g.norm() + zz.ln().norm() + 1.0);
                        mag += e * e;
                    }
                }
                Ok((acc, mag))
            })
            .collect();
        let mut total = NeumaierC::default();
        let mut mag = 0.0;
        for p in partial {
            let (acc, m) = p?;
            total.merge(&acc);
            mag += m;
        }
        // independent rounding errors: random-walk growth
        let total = total.total();
        Ok((total, 8.0 * f64::EPSILON * (mag.sqrt() + total.norm())))
    }

    /// Evaluate with absolute tolerance `tol` on the truncation error.
    pub fn eval(&self, tol: f64) -> Result<LatticeValue> {
        self.validate()?;
        let tol = if tol > 0.0 { tol } else { 1e-15 };
        let plan = self.plan(tol)?;
        let (head, round) = self.head(plan.m)?;
        let mut tail = Complex64::new(0.0, 0.0);
        for m in std::iter::once(1).chain((1..=plan.order).map(|j| 2 * j)) {
            let (a, scale) = self.tail_coefficient(m);
            if a.norm() <= 1e-13 * scale {
                continue;
            }
            tail += a * self.weight.tail(self.k + m as f64 * self.big_n, plan.m);
        }
        let value = head + tail;
        Ok(LatticeValue {
            value,
            abs_err: plan.bound + round + 4.0 * f64::EPSILON * tail.norm(),
            terms: plan.m,
        })
    }
}
