//! Asymptotic expansions checked against direct evaluation.

use super::{ext_f_asym_inf, ext_f_asym_zero, lambert_asym, pair_asym_inf, pair_asym_zero};
use crate::error::{domain, HerglotzError, Result};
use crate::herglotz::{ext_f, EvalOutcome, HerglotzParams, DEFAULT_TOL};
use crate::identities::{IdentityReport, Params, Val};
use crate::lambert::{lambert_sum, LambertSpec};
use crate::params;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Which expansion to compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AsymTarget {
    /// 𝓕_{k,N}(x) as x → ∞.
    FkNInf,
    /// 𝓕_{k,N}(x) as x → 0.
    FkNZero,
    /// 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π) as x → ∞.
    PairInf,
    /// 𝓕_{k,N}(ix/2π) + 𝓕_{k,N}(−ix/2π) as x → 0.
    PairZero,
    /// Σ n^{N−2Nm−1}/(e^{(2n)^N α} − 1) as α → 0⁺.
    Lambert,
}

impl AsymTarget {
    pub const ALL: [AsymTarget; 5] =
        [AsymTarget::FkNInf, AsymTarget::FkNZero, AsymTarget::PairInf, AsymTarget::PairZero, AsymTarget::Lambert];

    pub fn as_str(&self) -> &'static str {
        match self {
            AsymTarget::FkNInf => "FkN-inf",
            AsymTarget::FkNZero => "FkN-zero",
            AsymTarget::PairInf => "pair-inf",
            AsymTarget::PairZero => "pair-zero",
            AsymTarget::Lambert => "lambert",
        }
    }

    /// Name used in identity reports.
    pub fn identity(&self) -> &'static str {
        match self {
            AsymTarget::FkNInf => "asym_FkN-inf",
            AsymTarget::FkNZero => "asym_FkN-zero",
            AsymTarget::PairInf => "asym_pair-inf",
            AsymTarget::PairZero => "asym_pair-zero",
            AsymTarget::Lambert => "asym_lambert",
        }
    }

    /// True when the limit is x → 0.
    pub fn toward_zero(&self) -> bool {
        matches!(self, AsymTarget::FkNZero | AsymTarget::PairZero | AsymTarget::Lambert)
    }
}

impl fmt::Display for AsymTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AsymTarget {
    type Err = HerglotzError;

    fn from_str(s: &str) -> Result<Self> {
        AsymTarget::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| HerglotzError::Config(format!("unknown asymptotic target '{s}'")))
    }
}

/// Parameters of one comparison. `m` is used by the Lambert target only,
/// `k` by the others.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymParams {
    pub k: f64,
    pub big_n: f64,
    pub m: u32,
    pub terms: usize,
}

/// One row of a comparison table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymRow {
    pub x: Complex64,
    pub direct: EvalOutcome,
    pub asymptotic: EvalOutcome,
    pub abs_diff: f64,
    /// Remainder bound of the truncated expansion plus the error of the direct value.
    pub bound: f64,
}

impl AsymRow {
    pub fn within_bound(&self) -> bool {
        self.abs_diff <= self.bound
    }
}

fn int(v: f64, what: &str) -> Result<u32> {
    if v >= 1.0 && v == v.floor() && v < 1e6 {
        Ok(v as u32)
    } else {
        domain(format!("{what} must be a positive integer, got {v}"))
    }
}

fn pair_direct(p: HerglotzParams, x: Complex64) -> Result<EvalOutcome> {
    let y = Complex64::new(0.0, 1.0) * x / (2.0 * PI);
    let a = ext_f(p, y, DEFAULT_TOL)?;
    let b = ext_f(p, -y, DEFAULT_TOL)?;
    Ok(EvalOutcome { value: a.value + b.value, abs_err: a.abs_err + b.abs_err, terms_used: a.terms_used + b.terms_used, ..a })
}

/// Direct value and truncated expansion at one point.
pub fn asym_row(target: AsymTarget, p: AsymParams, x: Complex64) -> Result<AsymRow> {
    let (direct, asymptotic) = match target {
        AsymTarget::FkNInf => {
            let hp = HerglotzParams::new(p.k, p.big_n)?;
            (ext_f(hp, x, DEFAULT_TOL)?, ext_f_asym_inf(hp, x, p.terms)?)
        }
        AsymTarget::FkNZero => {
            let hp = HerglotzParams::new(p.k, p.big_n)?;
            let a = ext_f_asym_zero(int(p.k, "k")?, int(p.big_n, "N")?, x, p.terms)?;
            (ext_f(hp, x, DEFAULT_TOL)?, a)
        }
        AsymTarget::PairInf => {
            let hp = HerglotzParams::new(p.k, p.big_n)?;
            (pair_direct(hp, x)?, pair_asym_inf(hp, x, p.terms)?)
        }
        AsymTarget::PairZero => {
            let hp = HerglotzParams::new(p.k, p.big_n)?;
            let a = pair_asym_zero(int(p.k, "k")?, int(p.big_n, "N")?, x, p.terms)?;
            (pair_direct(hp, x)?, a)
        }
        AsymTarget::Lambert => {
            if x.im != 0.0 {
                return domain(format!("the Lambert expansion needs real α, got {x}"));
            }
            let n = int(p.big_n, "N")?;
            let a = lambert_asym(p.m, n, x.re, p.terms)?;
            let power = p.big_n - 2.0 * p.big_n * p.m as f64 - 1.0;
            (lambert_sum(LambertSpec::new(power, n, x)?, 1e-16)?, a)
        }
    };
    let abs_diff = (direct.value - asymptotic.value).norm();
    Ok(AsymRow { x, direct, asymptotic, abs_diff, bound: asymptotic.abs_err + direct.abs_err })
}

/// The comparison as an identity report whose tolerance is the row bound.
pub fn check_asym(target: AsymTarget, p: AsymParams, x: Complex64) -> Result<IdentityReport> {
    let row = asym_row(target, p, x)?;
    let params: Params = if target == AsymTarget::Lambert {
        params!("m" => p.m, "N" => p.big_n, "alpha" => x, "terms" => p.terms as i64)
    } else {
        params!("k" => p.k, "N" => p.big_n, "x" => x, "terms" => p.terms as i64)
    };
    Ok(IdentityReport::within_bound(target.identity(), params, Val::from(row.direct), Val::from(row.asymptotic), row.bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: f64, n: f64, m: u32, terms: usize) -> AsymParams {
        AsymParams { k, big_n: n, m, terms }
    }

    #[test]
    fn parse_targets() {
        for t in AsymTarget::ALL {
            assert_eq!(t.as_str().parse::<AsymTarget>().unwrap(), t);
        }
        assert!("nope".parse::<AsymTarget>().is_err());
    }

    #[test]
    fn rows_within_bound() {
        let cases = [
            (AsymTarget::FkNInf, p(2.0, 3.0, 0, 30), 20.0),
            (AsymTarget::FkNZero, p(1.0, 1.0, 0, 30), 0.02),
            (AsymTarget::PairInf, p(3.0, 1.0, 0, 30), 40.0),
            (AsymTarget::PairZero, p(3.0, 1.0, 0, 30), 0.3),
            (AsymTarget::Lambert, p(0.0, 1.0, 1, 30), 0.05),
        ];
        for (t, q, x) in cases {
            let r = check_asym(t, q, Complex64::new(x, 0.0)).unwrap();
            assert!(r.pass, "{t} at {x}: {} > {}", r.abs_residual, r.tolerance);
        }
    }

    #[test]
    fn few_terms_track_the_first_omitted_term() {
        let q = p(2.0, 3.0, 0, 2);
        let rows: Vec<_> = [20.0, 40.0, 80.0].iter().map(|&x| asym_row(AsymTarget::FkNInf, q, Complex64::new(x, 0.0)).unwrap()).collect();
        for w in rows.windows(2) {
            assert!(w[1].abs_diff < w[0].abs_diff);
        }
        assert!(rows.iter().all(AsymRow::within_bound));
    }
}
