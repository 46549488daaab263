//! Residual reports for identity checks.

use super::val::Val;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

/// Tolerance floor used when none is requested.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A parameter value recorded in a report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Complex([f64; 2]),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}
impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v as i64)
    }
}
impl From<i32> for ParamValue {
    fn from(v: i32) -> Self {
        ParamValue::Int(v as i64)
    }
}
impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}
impl From<Complex64> for ParamValue {
    fn from(v: Complex64) -> Self {
        if v.im == 0.0 {
            ParamValue::Real(v.re)
        } else {
            ParamValue::Complex([v.re, v.im])
        }
    }
}

pub type Params = BTreeMap<String, ParamValue>;

/// Build a parameter record from `(name, value)` pairs.
#[macro_export]
macro_rules! params {
    ($($name:literal => $v:expr),* $(,)?) => {{
        let mut p = $crate::identities::Params::new();
        $(p.insert($name.to_string(), $crate::identities::ParamValue::from($v));)*
        p
    }};
}

/// Outcome of checking one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub lhs_err: f64,
    pub rhs_err: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub terms_used: u64,
    pub runtime_ms: f64,
    pub notes: Vec<String>,
}

impl IdentityReport {
    /// Compare two sides. The tolerance is the larger of `requested` and three
    /// times the combined error estimate of the sides.
    pub fn new(identity: &str, params: Params, lhs: Val, rhs: Val, requested: f64) -> Self {
        let abs_residual = (lhs.v - rhs.v).norm();
        let scale = lhs.v.norm().max(rhs.v.norm());
        let rel_residual = if scale > 0.0 { abs_residual / scale } else { 0.0 };
        let tolerance = requested.max(3.0 * (lhs.e + rhs.e));
        Self {
            identity: identity.to_string(),
            params,
            lhs: [lhs.v.re, lhs.v.im],
            rhs: [rhs.v.re, rhs.v.im],
            lhs_err: lhs.e,
            rhs_err: rhs.e,
            abs_residual,
            rel_residual,
            tolerance,
            pass: abs_residual <= tolerance || rel_residual <= tolerance,
            terms_used: lhs.terms + rhs.terms,
            runtime_ms: 0.0,
            notes: Vec::new(),
        }
    }

    /// Compare two sides against a fixed bound on |lhs − rhs|.
    pub fn within_bound(identity: &str, params: Params, lhs: Val, rhs: Val, bound: f64) -> Self {
        let mut r = Self::new(identity, params, lhs, rhs, 0.0);
        r.tolerance = bound;
        r.pass = r.abs_residual <= bound;
        r
    }

    /// Re-apply the tolerance rule with a different requested floor.
    pub fn with_requested(mut self, requested: f64) -> Self {
        self.tolerance = requested.max(3.0 * (self.lhs_err + self.rhs_err));
        self.pass = self.abs_residual <= self.tolerance || self.rel_residual <= self.tolerance;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn lhs_value(&self) -> Complex64 {
        Complex64::new(self.lhs[0], self.lhs[1])
    }

    pub fn rhs_value(&self) -> Complex64 {
        Complex64::new(self.rhs[0], self.rhs[1])
    }

    /// Signed residual lhs − rhs.
    pub fn residual(&self) -> Complex64 {
        self.lhs_value() - self.rhs_value()
    }

    /// JSON with every float printed to 17 significant digits and keys in
    /// schema order, so equal reports serialize to equal bytes.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        write!(s, "\"identity\":{}", json_str(&self.identity)).unwrap();
        s.push_str(",\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{}:{}", json_str(k), param_json(v)).unwrap();
        }
        s.push('}');
        write!(s, ",\"lhs\":[{},{}]", num(self.lhs[0]), num(self.lhs[1])).unwrap();
        write!(s, ",\"rhs\":[{},{}]", num(self.rhs[0]), num(self.rhs[1])).unwrap();
        write!(s, ",\"lhs_err\":{}", num(self.lhs_err)).unwrap();
        write!(s, ",\"rhs_err\":{}", num(self.rhs_err)).unwrap();
        write!(s, ",\"abs_residual\":{}", num(self.abs_residual)).unwrap();
        write!(s, ",\"rel_residual\":{}", num(self.rel_residual)).unwrap();
        write!(s, ",\"tolerance\":{}", num(self.tolerance)).unwrap();
        write!(s, ",\"pass\":{}", self.pass).unwrap();
        write!(s, ",\"terms_used\":{}", self.terms_used).unwrap();
        write!(s, ",\"runtime_ms\":{}", num(self.runtime_ms)).unwrap();
        s.push_str(",\"notes\":[");
        for (i, n) in self.notes.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&json_str(n));
        }
        s.push_str("]}");
        s
    }
}

/// A float with 17 significant digits; non-finite values become null.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

fn param_json(v: &ParamValue) -> String {
    match v {
        ParamValue::Int(i) => i.to_string(),
        ParamValue::Real(x) => num(*x),
        ParamValue::Complex([re, im]) => format!("[{},{}]", num(*re), num(*im)),
    }
}

/// JSON string literal.
pub fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// JSON array of reports, one per line.
pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    let mut s = String::from("[\n");
    for (i, r) in reports.iter().enumerate() {
        s.push_str("  ");
        s.push_str(&r.to_json());
        if i + 1 < reports.len() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str("]\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_rule_and_tolerance_floor() {
        let a = Val::with_err(Complex64::new(1.0, 0.0), 1e-6);
        let b = Val::with_err(Complex64::new(1.0 + 5e-6, 0.0), 1e-6);
        let r = IdentityReport::new("t", params!("x" => 1.0), a, b, 1e-9);
        assert!((r.tolerance - 6e-6).abs() < 1e-18);
        assert!(r.pass);
        let r = IdentityReport::new("t", Params::new(), Val::real(1.0), Val::real(2.0), 1e-9);
        assert!(!r.pass);
    }

    #[test]
    fn json_round_trip() {
        let r = IdentityReport::new(
            "fe1",
            params!("k" => 3i64, "x" => Complex64::new(0.5, 1.5), "alpha" => 0.1),
            Val::with_err(Complex64::new(-0.123456789012345678, 1e-300), 1e-15),
            Val::real(std::f64::consts::PI),
            1e-9,
        )
        .with_note("a \"quoted\" note");
        let text = r.to_json();
        let back: IdentityReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }
}
