//! Parsing of numeric flag values: reals such as `0.3`, `1/3`, `2pi`, `pi/2`
//! and complex values such as `1+i`, `0.5+1.5i`, `3-2i`, `-i`.

use crate::error::{HerglotzError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

fn bad(s: &str) -> HerglotzError {
    HerglotzError::Config(format!("cannot parse number '{s}'"))
}

fn factor(s: &str) -> Result<f64> {
    if s.is_empty() {
        return Err(bad(s));
    }
    if s == "pi" {
        return Ok(PI);
    }
    if let Some(c) = s.strip_suffix("pi") {
        return Ok(factor(c)? * PI);
    }
    let v: f64 = s.parse().map_err(|_| bad(s))?;
    Ok(v)
}

/// A real number, optionally a quotient `p/q` and with `pi` factors.
pub fn parse_real(s: &str) -> Result<f64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    let v = match body.split_once('/') {
        Some((p, q)) => factor(p)? / factor(q)?,
        None => factor(body)?,
    };
    if !v.is_finite() {
        return Err(bad(&s));
    }
    Ok(if neg { -v } else { v })
}

/// A complex number `a`, `bi`, `a+bi` or `a-bi`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let imaginary = s.ends_with('i') && (!s.ends_with("pi") || s.ends_with("pii"));
    if !imaginary {
        return Ok(Complex64::new(parse_real(&s)?, 0.0));
    }
    let body = &s[..s.len() - 1];
    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (parse_real(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => parse_real(t)?,
    };
    Ok(Complex64::new(re, im))
}

/// Comma-separated list; empty input gives an empty list.
pub fn parse_list<T>(s: &str, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(item).collect()
}

/// A non-negative integer that fits in `u32`.
pub fn parse_u32(s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| HerglotzError::Config(format!("expected a non-negative integer, got '{s}'")))
}

/// A signed integer.
pub fn parse_i32(s: &str) -> Result<i32> {
    s.trim().parse().map_err(|_| HerglotzError::Config(format!("expected an integer, got '{s}'")))
}
