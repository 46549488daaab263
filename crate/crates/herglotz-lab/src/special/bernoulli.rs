//! Bernoulli numbers in exact rational arithmetic, memoised once per process.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index kept in the table. B_n overflows an f64 shortly after n = 260.
pub const BERNOULLI_MAX: usize = 260;

struct BernoulliTable {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let exact = bernoulli_recurrence(BERNOULLI_MAX);
        let float = exact.iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect();
        BernoulliTable { exact, float }
    })
}

/// B_0..=B_n from Σ_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = −1/2.
fn bernoulli_recurrence(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    // binom holds the row C(m+1, 0..=m+1) of Pascal's triangle.
    let mut binom: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::one(); binom.len() + 1];
        for j in 1..binom.len() {
            next[j] = &binom[j - 1] + &binom[j];
        }
        binom = next;
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * BigRational::from_integer(binom[j].clone());
            }
        }
        let denom = BigRational::from_integer(binom[m].clone());
        b.push(-acc / denom);
    }
    b
}

/// Exact B_n, or `None` beyond the table.
pub fn bernoulli_rational(n: usize) -> Option<BigRational> {
    table().exact.get(n).cloned()
}

/// B_n as f64 (B_1 = −1/2). Returns NaN beyond the table.
pub fn bernoulli_number(n: usize) -> f64 {
    table().float.get(n).copied().unwrap_or(f64::NAN)
}

/// Exact binomial coefficient as a rational.
pub(crate) fn binomial_rational(n: usize, k: usize) -> BigRational {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(c)
}

/// Bernoulli polynomial B_n(a) = Σ_j C(n, j) B_j a^{n−j} for rational a = p/q,
/// evaluated exactly and converted once at the end.
pub fn bernoulli_poly_rational(n: usize, p: i64, q: i64) -> BigRational {
    let a = BigRational::new(BigInt::from(p), BigInt::from(q));
    let mut acc = BigRational::zero();
    let mut apow = BigRational::one();
    // Horner would need B_j in reverse; a running power of a is just as exact.
    for j in (0..=n).rev() {
        let bj = bernoulli_rational(j).expect("index inside Bernoulli table");
        acc += binomial_rational(n, j) * bj * &apow;
        apow *= &a;
    }
    acc
}

/// Bernoulli polynomial B_n(a) for real a. Rational inputs with small
/// denominators go through the exact path.
pub fn bernoulli_poly(n: usize, a: f64) -> f64 {
    if let Some((p, q)) = small_rational(a) {
        return bernoulli_poly_rational(n, p, q).to_f64().unwrap_or(f64::NAN);
    }
    let mut acc = 0.0;
    let mut apow = 1.0;
    for j in (0..=n).rev() {
        acc += binomial_rational(n, j).to_f64().unwrap_or(f64::NAN) * bernoulli_number(j) * apow;
        apow *= a;
    }
    acc
}

/// Recognise a = p/q with q ≤ 1000 to within a few ulps.
pub(crate) fn small_rational(a: f64) -> Option<(i64, i64)> {
    for q in 1..=1000i64 {
        let p = (a * q as f64).round();
        if (p / q as f64 - a).abs() <= 4.0 * f64::EPSILON * a.abs().max(1.0) {
            return Some((p as i64, q));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), 1.0);
        assert_eq!(bernoulli_number(1), -0.5);
        assert_eq!(bernoulli_number(2), 1.0 / 6.0);
        assert_eq!(bernoulli_number(3), 0.0);
        assert_eq!(
            bernoulli_rational(12).unwrap(),
            BigRational::new(BigInt::from(-691), BigInt::from(2730))
        );
    }

    #[test]
    fn recurrence_residual_is_exactly_zero() {
        for n in 1..60usize {
            let mut acc = BigRational::zero();
            for k in 0..=n {
                acc += binomial_rational(n + 1, k) * bernoulli_rational(k).unwrap();
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn polynomial_laws() {
        // B_n(1) = (−1)^n B_n
        for n in 0..20usize {
            let lhs = bernoulli_poly_rational(n, 1, 1);
            let mut rhs = bernoulli_rational(n).unwrap();
            if n % 2 == 1 {
                rhs = -rhs;
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
        assert_eq!(bernoulli_poly(1, 1.0), 0.5);
        // d/da B_n(a) = n B_{n−1}(a), central difference at an irrational point
        let a = 0.3183;
        let h = 1e-5;
        for n in 2..10usize {
            let d = (bernoulli_poly(n, a + h) - bernoulli_poly(n, a - h)) / (2.0 * h);
            assert!((d - n as f64 * bernoulli_poly(n - 1, a)).abs() < 1e-7);
        }
    }
}
