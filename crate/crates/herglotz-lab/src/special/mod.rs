//! Special functions and constants shared by every other module.

mod bernoulli;
mod digamma;
mod gamma;
pub(crate) mod mellin;
mod polylog;
mod sum;
mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_poly_rational, bernoulli_rational, BERNOULLI_MAX};
pub use digamma::{digamma, digamma_real, psi_minus_log};
pub use gamma::{factorial, gamma, ln_gamma_abs};
pub use polylog::{gen_polylog, polylog};
pub use zeta::{double_zeta, riemann_zeta, riemann_zeta_deriv, stieltjes_gamma1};

pub(crate) use bernoulli::small_rational;
pub(crate) use polylog::lattice_exp;
pub(crate) use sum::NeumaierC;
pub(crate) use zeta::{periodic_dirichlet, periodic_tail, zeta_any, zeta_deriv_any, zeta_tail};

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_43;

/// First Stieltjes constant γ₁ (coefficient of −(s−1) in ζ(s) − 1/(s−1)).
pub const STIELTJES_GAMMA1: f64 = -0.072_815_845_483_676_724_860_586_375_874_901_32;

/// Constants at working precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsTable {
    pub euler_gamma: f64,
    pub stieltjes_gamma1: f64,
    pub pi: f64,
    pub log2: f64,
}

impl ConstantsTable {
    pub const fn new() -> Self {
        Self {
            euler_gamma: EULER_GAMMA,
            stieltjes_gamma1: STIELTJES_GAMMA1,
            pi: std::f64::consts::PI,
            log2: std::f64::consts::LN_2,
        }
    }
}

impl Default for ConstantsTable {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::sum::Neumaier;
    use super::*;

    #[test]
    fn euler_gamma_from_harmonic_limit() {
        // H_n − log n − 1/(2n) + 1/(12 n²) = γ + O(n^{−4})
        let n = 100_000u32;
        let mut h = Neumaier::default();
        for j in 1..=n {
            h.add(1.0 / j as f64);
        }
        let nf = n as f64;
        let g = h.total() - nf.ln() - 0.5 / nf + 1.0 / (12.0 * nf * nf);
        assert!((g - EULER_GAMMA).abs() < 1e-14);
    }

    #[test]
    fn gamma1_from_limit_definition() {
        // Σ_{k≤M} log k/k − log²M/2 → γ₁, first two corrections removed
        let m = 1_000_000u32;
        let mut s = Neumaier::default();
        for k in 2..=m {
            let kf = k as f64;
            s.add(kf.ln() / kf);
        }
        let mf = m as f64;
        let lm = mf.ln();
        let g1 = s.total() - 0.5 * lm * lm - lm / (2.0 * mf) - (1.0 - lm) / (12.0 * mf * mf);
        assert!((g1 - STIELTJES_GAMMA1).abs() < 1e-12, "{g1}");
        assert!(stieltjes_gamma1() < 0.0);
    }
}
