//! Run configuration: defaults, a flat `key=value` file, and validation.

use super::parse::{parse_complex, parse_i32, parse_list, parse_real, parse_u32};
use crate::error::{HerglotzError, Result};
use num_complex::Complex64;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "HERGLOTZ_LAB_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = HerglotzError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(HerglotzError::Config(format!("unknown output format '{other}'"))),
        }
    }
}

/// Grid axes given on the command line or in the config file. An axis that
/// is set replaces the corresponding axis of a suite's default grid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridOverrides {
    pub k: Option<Vec<f64>>,
    pub big_n: Option<Vec<u32>>,
    pub x: Option<Vec<Complex64>>,
    pub m: Option<Vec<i32>>,
    pub alpha: Option<Vec<Complex64>>,
    pub a: Option<Vec<f64>>,
}

impl GridOverrides {
    pub fn is_empty(&self) -> bool {
        *self == GridOverrides::default()
    }

    /// Axes from `other` take precedence.
    pub fn merge(&mut self, other: GridOverrides) {
        macro_rules! take {
            ($($f:ident),*) => {$(if other.$f.is_some() { self.$f = other.$f; })*};
        }
        take!(k, big_n, x, m, alpha, a);
    }

    /// Set one axis from its textual form.
    pub fn set(&mut self, key: &str, value: &str) -> Result<bool> {
        match key {
            "k" => self.k = Some(parse_list(value, parse_real)?),
            "N" => self.big_n = Some(parse_list(value, parse_u32)?),
            "x" => self.x = Some(parse_list(value, parse_complex)?),
            "m" => self.m = Some(parse_list(value, parse_i32)?),
            "alpha" => self.alpha = Some(parse_list(value, parse_complex)?),
            "a" => self.a = Some(parse_list(value, parse_real)?),
            _ => return Ok(false),
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub precision_digits: u32,
    pub tolerance: f64,
    pub grid: GridOverrides,
    pub output_format: OutputFormat,
    /// Worker threads; 0 lets the pool choose.
    pub parallelism: usize,
    /// Record wall-clock time per report (makes output non-reproducible).
    pub timings: bool,
    /// Expansion terms for asymptotic comparisons.
    pub terms: usize,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision_digits: 16,
            tolerance: 1e-9,
            grid: GridOverrides::default(),
            output_format: OutputFormat::Json,
            parallelism: 0,
            timings: false,
            terms: 30,
            out: None,
        }
    }
}

fn parse_bool(s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "true" | "1" | "yes" | "on" => Ok(true),
        "false" | "0" | "no" | "off" => Ok(false),
        other => Err(HerglotzError::Config(format!("expected a boolean, got '{other}'"))),
    }
}

impl RunConfig {
    /// Apply one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "precision" | "precision_digits" => self.precision_digits = parse_u32(value)?,
            "tolerance" => self.tolerance = parse_real(value)?,
            "format" | "output_format" => self.output_format = value.parse()?,
            "parallelism" => self.parallelism = parse_u32(value)? as usize,
            "timings" => self.timings = parse_bool(value)?,
            "terms" => self.terms = parse_u32(value)? as usize,
            "out" => self.out = Some(PathBuf::from(value)),
            key => {
                if !self.grid.set(key, value)? {
                    return Err(HerglotzError::Config(format!("unknown config key '{key}'")));
                }
            }
        }
        Ok(())
    }

    /// Parse flat `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| HerglotzError::Config(format!("line {}: expected key=value, got '{line}'", i + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HerglotzError::Config(format!("cannot read config {}: {e}", path.display())))?;
        self.apply_text(&text)
    }

    /// precision 15..=17 (f64 only) and tolerance ≥ 10^{4−precision}.
    pub fn validate(&self) -> Result<()> {
        if !(15..=17).contains(&self.precision_digits) {
            return Err(HerglotzError::Config(format!(
                "precision must be 15, 16 or 17 digits, got {}",
                self.precision_digits
            )));
        }
        let floor = 10f64.powi(4 - self.precision_digits as i32);
        if !(self.tolerance >= floor) || !self.tolerance.is_finite() {
            return Err(HerglotzError::Config(format!("tolerance {} is below the floor {floor:e}", self.tolerance)));
        }
        if self.terms == 0 {
            return Err(HerglotzError::Config("terms must be at least 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let c = RunConfig::default();
        c.validate().unwrap();
        assert_eq!(c.precision_digits, 16);
        assert_eq!(c.tolerance, 1e-9);
    }

    #[test]
    fn file_format() {
        let mut c = RunConfig::default();
        c.apply_text("# comment\ntolerance = 1e-6\nformat=csv\n\nk=2,3\nx=1+i, 2 # trailing\ntimings=true\n").unwrap();
        assert_eq!(c.tolerance, 1e-6);
        assert_eq!(c.output_format, OutputFormat::Csv);
        assert_eq!(c.grid.k, Some(vec![2.0, 3.0]));
        assert_eq!(c.grid.x, Some(vec![Complex64::new(1.0, 1.0), Complex64::new(2.0, 0.0)]));
        assert!(c.timings);
        assert!(c.apply_text("bogus=1").is_err());
        assert!(c.apply_text("no equals sign").is_err());
    }

    #[test]
    fn validation() {
        let mut c = RunConfig::default();
        c.precision_digits = 32;
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.tolerance = 1e-13;
        assert!(c.validate().is_err());
        c.precision_digits = 17;
        c.validate().unwrap();
    }
}
