//! Optimally truncated asymptotic series.

use num_complex::Complex64;

/// How far past a zero first omitted term to look for a nonzero one.
const LOOKAHEAD: usize = 16;

/// A divergent series Σ_{n≥1} t_n summed up to its smallest term.
///
/// `truncation_index` is the index of the first local minimum of |t_n| over
/// the non-zero terms (ties go to the smaller index), or `max_terms + 1` when
/// the magnitudes keep decreasing. Terms before it are summed and
/// `remainder_bound` is the magnitude of the first omitted nonzero one.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymSeries {
    pub variable: Complex64,
    pub max_terms: usize,
    pub terms: Vec<Complex64>,
    pub truncation_index: usize,
    pub remainder_bound: f64,
}

impl AsymSeries {
    /// Generates t_1, …, t_{max_terms+1} from `term(n)` and picks the truncation.
    pub fn build(variable: Complex64, max_terms: usize, term: impl Fn(usize) -> Complex64) -> Self {
        let mut terms = Vec::with_capacity(max_terms + 1);
        let mut truncation_index = max_terms + 1;
        let mut prev: Option<(usize, f64)> = None;
        for n in 1..=max_terms + 1 {
            let t = term(n);
            terms.push(t);
            let m = t.norm();
            if m == 0.0 {
                continue;
            }
            if !m.is_finite() {
                truncation_index = prev.map_or(n, |(i, _)| i);
                break;
            }
            if let Some((i, pm)) = prev {
                if m >= pm {
                    truncation_index = i;
                    break;
                }
            }
            prev = Some((n, m));
        }
        let mut remainder_bound = terms.get(truncation_index - 1).map_or(0.0, |t| t.norm());
        // a structurally zero first omitted term says nothing; use the next nonzero one
        let mut n = truncation_index;
        while remainder_bound == 0.0 && n < truncation_index + LOOKAHEAD {
            n += 1;
            remainder_bound = term(n).norm();
        }
        terms.truncate(truncation_index.min(terms.len()));
        Self { variable, max_terms, terms, truncation_index, remainder_bound }
    }

    /// Sum of the retained terms t_1, …, t_{truncation_index − 1}.
    pub fn sum(&self) -> Complex64 {
        self.terms.iter().take(self.truncation_index - 1).sum()
    }

    /// Number of terms summed.
    pub fn used(&self) -> usize {
        self.truncation_index - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn stops_at_the_smallest_term() {
        // n!/10^n is smallest at n = 9 and n = 10 (equal); ties go to 9
        let s = AsymSeries::build(c(10.0), 40, |n| c((1..=n).map(|i| i as f64).product::<f64>() / 10f64.powi(n as i32)));
        assert_eq!(s.truncation_index, 9);
        assert_eq!(s.used(), 8);
        assert!((s.remainder_bound - 362880.0 / 1e9).abs() < 1e-15);
    }

    #[test]
    fn skips_zero_terms_and_respects_the_cap() {
        let s = AsymSeries::build(c(0.5), 5, |n| if n % 2 == 0 { c(0.0) } else { c(0.5f64.powi(n as i32)) });
        assert_eq!(s.truncation_index, 6);
        assert_eq!(s.remainder_bound, 0.5f64.powi(7));
        assert!((s.sum().re - (0.5 + 0.125 + 0.03125)).abs() < 1e-16);
        let s = AsymSeries::build(c(1.0), 0, |_| c(0.25));
        assert_eq!((s.truncation_index, s.remainder_bound), (1, 0.25));
        assert_eq!(s.sum(), c(0.0));
    }
}
