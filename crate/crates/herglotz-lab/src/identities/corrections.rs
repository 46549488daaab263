//! Correction terms 𝓑(k, N, x) and 𝓒(k, N, x) of the functional equations.

use crate::error::{gate, Result};
use crate::special::{riemann_zeta_deriv, zeta_any, EULER_GAMMA};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// 𝓑(k, N, x) = (−1)^{k+N+1} x^{1/N} ζ(1 + k/N) when k = N, else 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionB {
    pub k: u32,
    pub big_n: u32,
}

impl CorrectionB {
    pub fn new(k: u32, big_n: u32) -> Self {
        Self { k, big_n }
    }

    pub fn active(&self) -> bool {
        self.k == self.big_n
    }

    pub fn value(&self, x: Complex64) -> Complex64 {
        if !self.active() {
            return Complex64::new(0.0, 0.0);
        }
        let (k, n) = (self.k as f64, self.big_n as f64);
        let sign = if (self.k + self.big_n + 1) % 2 == 0 { 1.0 } else { -1.0 };
        sign * x.powf(1.0 / n) * zeta_any(1.0 + k / n)
    }
}

/// Which form of 𝓒 applies to an odd pair (k, N).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrectionBranch {
    /// (1 − k)/N ≠ −2⌊k/(2N)⌋
    Generic,
    /// (1 − k)/N = −2⌊k/(2N)⌋ with k > 1
    Resonant,
    /// k = 1, handled by the triple-pole transformation instead
    TriplePole,
}

/// 𝓒(k, N, x) for odd k, N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorrectionC {
    pub k: u32,
    pub big_n: u32,
    pub branch: CorrectionBranch,
}

impl CorrectionC {
    pub fn new(k: u32, big_n: u32) -> Result<Self> {
        if k % 2 == 0 || big_n % 2 == 0 || k == 0 || big_n == 0 {
            return gate(format!("𝓒(k, N, x) needs odd k and N, got k = {k}, N = {big_n}"));
        }
        Ok(Self { k, big_n, branch: Self::branch_of(k, big_n) })
    }

    pub fn branch_of(k: u32, big_n: u32) -> CorrectionBranch {
        let fl = k / (2 * big_n);
        if k == 1 {
            CorrectionBranch::TriplePole
        } else if k - 1 == 2 * big_n * fl {
            CorrectionBranch::Resonant
        } else {
            CorrectionBranch::Generic
        }
    }

    /// 4π Σ_{j=1}^{J} (−1)^j (2π)^{−2j−1} ζ(k − 2Nj) ζ(2j+1) x^{2j}
    fn power_sum(&self, upper: u32, x: Complex64) -> Complex64 {
        let (k, n) = (self.k as f64, self.big_n as f64);
        let mut s = Complex64::new(0.0, 0.0);
        for j in 1..=upper {
            let jf = j as f64;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            s += sign * (2.0 * PI).powf(-2.0 * jf - 1.0) * zeta_any(k - 2.0 * n * jf) * zeta_any(2.0 * jf + 1.0) * x.powi(2 * j as i32);
        }
        4.0 * PI * s
    }

    pub fn value(&self, x: Complex64) -> Result<Complex64> {
        let (k, n) = (self.k as f64, self.big_n as f64);
        let fl = self.k / (2 * self.big_n);
        let r = (x / (2.0 * PI)).powf((k - 1.0) / n);
        match self.branch {
            CorrectionBranch::Generic => {
                let lead = PI * zeta_any((n + k - 1.0) / n) / (n * (PI / (2.0 * n) * (1.0 - k)).sin());
                Ok(lead * r + self.power_sum(fl, x))
            }
            CorrectionBranch::Resonant => {
                let s = 1.0 + (k - 1.0) / n;
                let sign = if ((self.k - 1) / (2 * self.big_n)) % 2 == 0 { 1.0 } else { -1.0 };
                let bracket = (n * EULER_GAMMA + (2.0 * PI / x).ln()) * zeta_any(s) - riemann_zeta_deriv(s)?;
                Ok(2.0 * sign / n * r * bracket + self.power_sum(fl - 1, x))
            }
            CorrectionBranch::TriplePole => gate("𝓒(k, N, x) is not defined for k = 1; use the triple-pole transformation"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_is_active_only_on_the_diagonal() {
        let x = Complex64::new(1.3, 0.0);
        assert_eq!(CorrectionB::new(2, 3).value(x), Complex64::new(0.0, 0.0));
        let v = CorrectionB::new(2, 2).value(x);
        assert!((v.re + 1.3f64.sqrt() * zeta_any(2.0)).abs() < 1e-15);
    }

    #[test]
    fn branch_selection_is_total() {
        for k in (1..40).step_by(2) {
            for n in (1..12).step_by(2) {
                let c = CorrectionC::new(k, n).unwrap();
                let fl = k / (2 * n);
                let resonant = (1.0 - k as f64) / n as f64 == -2.0 * fl as f64;
                match c.branch {
                    CorrectionBranch::TriplePole => assert_eq!(k, 1),
                    CorrectionBranch::Resonant => assert!(resonant && k > 1),
                    CorrectionBranch::Generic => assert!(!resonant),
                }
            }
        }
        assert!(CorrectionC::new(2, 3).is_err());
    }

    #[test]
    fn empty_sums_vanish() {
        // (k, N) = (3, 3): ⌊k/2N⌋ = 0, so only the leading term remains
        let c = CorrectionC::new(3, 3).unwrap();
        assert_eq!(c.power_sum(0, Complex64::new(2.0, 0.0)), Complex64::new(0.0, 0.0));
        // (k, N) = (3, 1) is resonant with ⌊k/2N⌋ − 1 = 0 power terms
        assert_eq!(CorrectionC::new(3, 1).unwrap().branch, CorrectionBranch::Resonant);
    }
}
