//! Values carrying an absolute error estimate through identity assembly.

use crate::herglotz::EvalOutcome;
use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex value with an absolute error estimate and a work counter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Val {
    pub v: Complex64,
    pub e: f64,
    pub terms: u64,
}

impl Val {
    /// A value known to rounding accuracy.
    pub fn exact(v: Complex64) -> Self {
        Self { v, e: 4.0 * f64::EPSILON * v.norm(), terms: 0 }
    }

    pub fn real(x: f64) -> Self {
        Self::exact(Complex64::new(x, 0.0))
    }

    pub fn zero() -> Self {
        Self { v: Complex64::new(0.0, 0.0), e: 0.0, terms: 0 }
    }

    pub fn with_err(v: Complex64, e: f64) -> Self {
        Self { v, e, terms: 0 }
    }

    pub fn scale(self, c: Complex64) -> Self {
        Self { v: self.v * c, e: self.e * c.norm() + 2.0 * f64::EPSILON * (self.v * c).norm(), terms: self.terms }
    }
}

impl From<EvalOutcome> for Val {
    fn from(o: EvalOutcome) -> Self {
        Self { v: o.value, e: o.abs_err, terms: o.terms_used }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, o: Val) -> Val {
        Val { v: self.v + o.v, e: self.e + o.e, terms: self.terms + o.terms }
    }
}

impl Sub for Val {
    type Output = Val;
    fn sub(self, o: Val) -> Val {
        Val { v: self.v - o.v, e: self.e + o.e, terms: self.terms + o.terms }
    }
}

impl Neg for Val {
    type Output = Val;
    fn neg(self) -> Val {
        Val { v: -self.v, ..self }
    }
}

impl Mul for Val {
    type Output = Val;
    fn mul(self, o: Val) -> Val {
        let v = self.v * o.v;
        Val {
            v,
            e: self.v.norm() * o.e + o.v.norm() * self.e + self.e * o.e + 2.0 * f64::EPSILON * v.norm(),
            terms: self.terms + o.terms,
        }
    }
}

impl Mul<Complex64> for Val {
    type Output = Val;
    fn mul(self, c: Complex64) -> Val {
        self.scale(c)
    }
}

impl Mul<f64> for Val {
    type Output = Val;
    fn mul(self, c: f64) -> Val {
        self.scale(Complex64::new(c, 0.0))
    }
}

impl std::iter::Sum for Val {
    fn sum<I: Iterator<Item = Val>>(iter: I) -> Val {
        iter.fold(Val::zero(), |a, b| a + b)
    }
}
