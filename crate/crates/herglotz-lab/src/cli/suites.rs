//! Verification suites: default grids, overrides and parallel execution.

use super::config::{GridOverrides, RunConfig};
use crate::asym::{check_asym, AsymParams, AsymTarget};
use crate::error::{HerglotzError, Result};
use crate::identities::{self as id, IdentityReport, Params, Val};
use crate::lambert::{check_companion, check_ramanujan, check_thm211, check_thm212, check_zetagen_a};
use crate::params;
use crate::quadrature::{check_cor210, check_cor29, check_thm28};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    FeZagier,
    FeVz,
    Thm21,
    Thm22,
    Thm23,
    Cor24,
    Modular,
    Raabe,
    Thm28,
    Cor29To210,
    Ramanujan,
    Companion,
    Thm211,
    Thm212,
    ZetagenA,
    Asym,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::FeZagier,
        Suite::FeVz,
        Suite::Thm21,
        Suite::Thm22,
        Suite::Thm23,
        Suite::Cor24,
        Suite::Modular,
        Suite::Raabe,
        Suite::Thm28,
        Suite::Cor29To210,
        Suite::Ramanujan,
        Suite::Companion,
        Suite::Thm211,
        Suite::Thm212,
        Suite::ZetagenA,
        Suite::Asym,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::FeZagier => "fe-zagier",
            Suite::FeVz => "fe-vz",
            Suite::Thm21 => "thm21",
            Suite::Thm22 => "thm22",
            Suite::Thm23 => "thm23",
            Suite::Cor24 => "cor24",
            Suite::Modular => "modular",
            Suite::Raabe => "raabe",
            Suite::Thm28 => "thm28",
            Suite::Cor29To210 => "cor29-210",
            Suite::Ramanujan => "ramanujan",
            Suite::Companion => "companion",
            Suite::Thm211 => "thm211",
            Suite::Thm212 => "thm212",
            Suite::ZetagenA => "zetagen-a",
            Suite::Asym => "asym",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s.eq_ignore_ascii_case("all") {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![s.parse()?])
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = HerglotzError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| HerglotzError::Config(format!("unknown suite '{s}'")))
    }
}

type Check = Box<dyn Fn() -> Result<IdentityReport> + Send + Sync>;

/// One identity at one grid point, not yet evaluated.
pub struct Task {
    pub suite: Suite,
    pub identity: &'static str,
    pub params: Params,
    check: Check,
}

impl fmt::Debug for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Task").field("suite", &self.suite).field("identity", &self.identity).field("params", &self.params).finish()
    }
}

impl Task {
    fn new(suite: Suite, identity: &'static str, params: Params, check: impl Fn() -> Result<IdentityReport> + Send + Sync + 'static) -> Self {
        Self { suite, identity, params, check: Box::new(check) }
    }

    /// Evaluate. Non-convergence becomes a failing report; other errors propagate.
    pub fn run(&self, cfg: &RunConfig) -> Result<IdentityReport> {
        let start = Instant::now();
        let report = match (self.check)() {
            Ok(r) if self.suite == Suite::Asym => r,
            Ok(r) => r.with_requested(cfg.tolerance),
            Err(HerglotzError::NonConvergence(msg)) => {
                let nan = Val::with_err(Complex64::new(f64::NAN, f64::NAN), f64::NAN);
                let mut r = IdentityReport::new(self.identity, self.params.clone(), nan, nan, cfg.tolerance)
                    .with_note(format!("no convergence: {msg}"));
                r.pass = false;
                r
            }
            Err(e) => return Err(e),
        };
        let mut report = report;
        report.runtime_ms = if cfg.timings { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
        Ok(report)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn pos_int(v: f64, name: &str) -> Result<u32> {
    if v >= 1.0 && v == v.floor() && v < 1e6 {
        Ok(v as u32)
    } else {
        Err(HerglotzError::Config(format!("{name} must be a positive integer here, got {v}")))
    }
}

fn pos_m(v: i32) -> Result<u32> {
    if v >= 1 {
        Ok(v as u32)
    } else {
        Err(HerglotzError::Config(format!("m must be a positive integer here, got {v}")))
    }
}

fn dedup<T: PartialEq + Copy>(v: impl IntoIterator<Item = T>) -> Vec<T> {
    let mut out = Vec::new();
    for t in v {
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// (k, N) pairs: the default list, or the product of the given axes (a missing
/// axis falls back to the values occurring in the defaults).
fn kn_pairs(g: &GridOverrides, default: &[(u32, u32)]) -> Result<Vec<(u32, u32)>> {
    if g.k.is_none() && g.big_n.is_none() {
        return Ok(default.to_vec());
    }
    let ks = match &g.k {
        Some(ks) => ks.iter().map(|&k| pos_int(k, "k")).collect::<Result<Vec<_>>>()?,
        None => dedup(default.iter().map(|p| p.0)),
    };
    let ns = match &g.big_n {
        Some(ns) => ns.clone(),
        None => dedup(default.iter().map(|p| p.1)),
    };
    Ok(ks.iter().flat_map(|&k| ns.iter().map(move |&n| (k, n))).collect())
}

fn ks(g: &GridOverrides, default: &[u32]) -> Result<Vec<u32>> {
    match &g.k {
        Some(ks) => ks.iter().map(|&k| pos_int(k, "k")).collect(),
        None => Ok(default.to_vec()),
    }
}

fn ns(g: &GridOverrides, default: &[u32]) -> Vec<u32> {
    g.big_n.clone().unwrap_or_else(|| default.to_vec())
}

fn xs(g: &GridOverrides, default: &[Complex64]) -> Vec<Complex64> {
    g.x.clone().unwrap_or_else(|| default.to_vec())
}

fn alphas(g: &GridOverrides, default: &[Complex64]) -> Vec<Complex64> {
    g.alpha.clone().unwrap_or_else(|| default.to_vec())
}

fn ms(g: &GridOverrides, default: &[i32]) -> Vec<i32> {
    g.m.clone().unwrap_or_else(|| default.to_vec())
}

fn real_x(x: Complex64) -> Result<f64> {
    if x.im == 0.0 && x.re > 0.0 {
        Ok(x.re)
    } else {
        Err(HerglotzError::Config(format!("x must be a positive real here, got {x}")))
    }
}

/// Default asymptotic validation points: (target, k, N, m, x).
pub const ASYM_POINTS: [(AsymTarget, f64, f64, u32, f64); 16] = [
    (AsymTarget::FkNInf, 1.0, 1.0, 0, 50.0),
    (AsymTarget::FkNInf, 2.0, 3.0, 0, 20.0),
    (AsymTarget::FkNZero, 1.0, 1.0, 0, 0.02),
    (AsymTarget::FkNZero, 2.0, 2.0, 0, 0.01),
    (AsymTarget::FkNZero, 2.0, 3.0, 0, 1e-4),
    (AsymTarget::FkNZero, 1.0, 3.0, 0, 1e-4),
    (AsymTarget::PairInf, 3.0, 1.0, 0, 40.0),
    (AsymTarget::PairInf, 1.0, 3.0, 0, 40.0),
    (AsymTarget::PairZero, 3.0, 1.0, 0, 0.3),
    (AsymTarget::PairZero, 5.0, 1.0, 0, 0.5),
    (AsymTarget::PairZero, 1.0, 1.0, 0, 0.3),
    (AsymTarget::PairZero, 3.0, 3.0, 0, 0.002),
    (AsymTarget::PairZero, 1.0, 3.0, 0, 0.002),
    (AsymTarget::Lambert, 0.0, 1.0, 1, 0.05),
    (AsymTarget::Lambert, 0.0, 1.0, 2, 0.1),
    (AsymTarget::Lambert, 0.0, 3.0, 1, 0.001),
];

/// Tasks of one suite on its default grid, with overrides applied.
pub fn suite_tasks(suite: Suite, g: &GridOverrides, terms: usize) -> Result<Vec<Task>> {
    let mut t = Vec::new();
    let s = suite;
    match suite {
        Suite::FeZagier => {
            for x in xs(g, &[r(0.3), r(0.7), r(1.0), r(1.3), r(2.6), c(0.5, 1.5)]) {
                t.push(Task::new(s, "fe1", params!("x" => x), move || id::check_zagier_fe1(x)));
                t.push(Task::new(s, "fe2", params!("x" => x), move || id::check_zagier_fe2(x)));
            }
        }
        Suite::FeVz => {
            for k in ks(g, &[2, 3, 4])? {
                for x in xs(g, &[r(0.8), r(1.0), r(2.0), c(1.0, 1.0)]) {
                    t.push(Task::new(s, "vz1", params!("k" => k, "x" => x), move || id::check_vz1(k, x)));
                    t.push(Task::new(s, "vz2", params!("k" => k, "x" => x), move || id::check_vz2(k, x)));
                }
            }
        }
        Suite::Thm21 => {
            let grid = xs(g, &[r(0.6), r(1.3), c(2.0, 1.0)]);
            let k1_only = g.k.as_ref().is_some_and(|ks| ks.iter().all(|&k| k == 1.0));
            if !k1_only {
                let g_k = GridOverrides { k: g.k.as_ref().map(|ks| ks.iter().copied().filter(|&k| k != 1.0).collect()), ..g.clone() };
                for (k, n) in kn_pairs(&g_k, &[(2, 2), (2, 3), (3, 3), (3, 5)])? {
                    for &x in &grid {
                        t.push(Task::new(s, "thm21", params!("k" => k, "N" => n, "x" => x), move || id::check_thm21(k, n, x)));
                    }
                }
            }
            if g.k.as_ref().map_or(true, |ks| ks.contains(&1.0)) {
                for n in ns(g, &[1, 2, 3]) {
                    for &x in &grid {
                        t.push(Task::new(s, "thm21_k1", params!("N" => n, "x" => x), move || id::check_thm21_k1(n, x)));
                    }
                }
            }
        }
        Suite::Thm22 => {
            let grid = xs(g, &[r(0.5), r(1.2), r(4.0), c(1.0, 0.5)]);
            for (k, n) in kn_pairs(g, &[(3, 1), (3, 3), (5, 3)])? {
                for &x in &grid {
                    t.push(Task::new(s, "thm22", params!("k" => k, "N" => n, "x" => x), move || id::check_thm22(k, n, x)));
                }
            }
            if g.is_empty() {
                for (k, n) in [(3, 3), (3, 5)] {
                    for x in [r(0.6), r(1.3), r(2.0), c(1.0, 0.5)] {
                        t.push(Task::new(s, "equivalence", params!("k" => k, "N" => n, "x" => x), move || id::check_equivalence(k, n, x)));
                    }
                }
            }
        }
        Suite::Thm23 => {
            for n in ns(g, &[1, 3]) {
                for x in xs(g, &[r(0.5), r(1.2), r(4.0), c(1.0, 0.5)]) {
                    t.push(Task::new(s, "thm23", params!("N" => n, "x" => x), move || id::check_thm23(n, x)));
                }
            }
        }
        Suite::Cor24 => {
            let m_list = ms(g, &[1, 2]).into_iter().map(pos_m).collect::<Result<Vec<_>>>()?;
            for &m in &m_list {
                for a in alphas(g, &[r(2.0 * PI), r(3.0), c(1.0, 1.0)]) {
                    t.push(Task::new(s, "cor24", params!("m" => m, "alpha" => a), move || id::check_cor24(m, a)));
                }
                t.push(Task::new(s, "trans4m1", params!("m" => m), move || id::check_trans4m1(m)));
            }
        }
        Suite::Modular => {
            for a in alphas(g, &[r(2.0 * PI), r(4.0), c(1.0, 1.0)]) {
                t.push(Task::new(s, "modular", params!("alpha" => a), move || id::check_modular(a)));
            }
        }
        Suite::Raabe => {
            for u in xs(g, &[r(5.0), r(2.0 * PI), c(3.0, 2.0)]) {
                t.push(Task::new(s, "raabe", params!("u" => u), move || id::check_raabe(u)));
            }
        }
        Suite::Thm28 => {
            for (k, n) in kn_pairs(g, &[(1, 1), (2, 1), (1, 2), (2, 3)])? {
                for x in xs(g, &[r(0.7), r(1.0), r(1.3)]) {
                    let xr = real_x(x)?;
                    t.push(Task::new(s, "thm28", params!("k" => k, "N" => n, "x" => xr), move || check_thm28(k, n, xr)));
                }
            }
        }
        Suite::Cor29To210 => {
            for k in ks(g, &[2, 3])? {
                for x in xs(g, &[r(0.7), r(1.3)]) {
                    let xr = real_x(x)?;
                    t.push(Task::new(s, "cor29", params!("k" => k, "x" => xr), move || check_cor29(k, xr)));
                }
            }
            for k in ks(g, &[3, 5])? {
                t.push(Task::new(s, "cor210", params!("k" => k), move || check_cor210(k)));
            }
        }
        Suite::Ramanujan => {
            for m in ms(g, &[1, -1, 2]) {
                for a in alphas(g, &[r(PI), r(2.0), c(1.3, 0.4)]) {
                    t.push(Task::new(s, "ramanujan", params!("m" => m, "alpha" => a), move || check_ramanujan(m, a)));
                }
            }
        }
        Suite::Companion => {
            for m in ms(g, &[1, 2]).into_iter().map(pos_m).collect::<Result<Vec<_>>>()? {
                for a in alphas(g, &[r(PI), r(1.5)]) {
                    t.push(Task::new(s, "companion", params!("m" => m, "alpha" => a), move || check_companion(m, a)));
                }
            }
        }
        Suite::Thm211 => {
            for m in ms(g, &[1, 2]).into_iter().map(pos_m).collect::<Result<Vec<_>>>()? {
                for n in ns(g, &[1, 3]) {
                    for a in alphas(g, &[r(0.8), r(2.0)]) {
                        t.push(Task::new(s, "thm211", params!("m" => m, "N" => n, "alpha" => a), move || check_thm211(m, n, a)));
                    }
                }
            }
        }
        Suite::Thm212 => {
            for n in ns(g, &[1, 3]) {
                for a in alphas(g, &[r(0.7), r(2.0)]) {
                    t.push(Task::new(s, "thm212", params!("N" => n, "alpha" => a), move || check_thm212(n, a)));
                }
            }
        }
        Suite::ZetagenA => {
            let a_list = g.a.clone().unwrap_or_else(|| vec![1.0 / 3.0, 0.5]);
            for m in ms(g, &[1]).into_iter().map(pos_m).collect::<Result<Vec<_>>>()? {
                for n in ns(g, &[1, 3]) {
                    for &a in &a_list {
                        for al in alphas(g, &[r(2.0), r(PI)]) {
                            t.push(Task::new(s, "zetagen_a", params!("a" => a, "m" => m, "N" => n, "alpha" => al), move || {
                                check_zetagen_a(a, m, n, al)
                            }));
                        }
                    }
                }
            }
        }
        Suite::Asym => {
            for (target, k, n, m, x) in ASYM_POINTS {
                let k_ok = g.k.as_ref().map_or(true, |ks| ks.contains(&k));
                let n_ok = g.big_n.as_ref().map_or(true, |ns| ns.contains(&(n as u32)));
                let m_ok = g.m.as_ref().map_or(true, |ms| ms.contains(&(m as i32)));
                if !(k_ok && n_ok && (target != AsymTarget::Lambert || m_ok)) {
                    continue;
                }
                let p = AsymParams { k, big_n: n, m, terms };
                let point = r(x);
                let params = if target == AsymTarget::Lambert {
                    params!("m" => m, "N" => n, "alpha" => point, "terms" => terms as i64)
                } else {
                    params!("k" => k, "N" => n, "x" => point, "terms" => terms as i64)
                };
                t.push(Task::new(s, target.identity(), params, move || check_asym(target, p, point)));
            }
        }
    }
    if t.is_empty() {
        return Err(HerglotzError::Config(format!("suite {suite} has an empty grid")));
    }
    Ok(t)
}

/// Evaluate tasks on a pool of `cfg.parallelism` workers; reports keep task order.
pub fn run_tasks(tasks: &[Task], cfg: &RunConfig) -> Result<Vec<IdentityReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| HerglotzError::Config(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<IdentityReport>> = pool.install(|| tasks.par_iter().map(|t| t.run(cfg)).collect());
    results.into_iter().collect()
}

/// Identity names reachable from the default grids of the given suites.
pub fn covered_identities(suites: &[Suite]) -> Vec<&'static str> {
    let g = GridOverrides::default();
    let mut names: Vec<&'static str> =
        suites.iter().flat_map(|&s| suite_tasks(s, &g, 30).unwrap_or_default()).map(|t| t.identity).collect();
    names.sort_unstable();
    names.dedup();
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 16);
        assert!(Suite::parse_selection("thm99").is_err());
    }

    #[test]
    fn overrides_replace_axes() {
        let g = GridOverrides { k: Some(vec![5.0]), big_n: Some(vec![3]), ..Default::default() };
        let tasks = suite_tasks(Suite::Thm21, &g, 30).unwrap();
        assert!(tasks.iter().all(|t| t.identity == "thm21"));
        let cfg = RunConfig::default();
        assert!(matches!(tasks[0].run(&cfg), Err(HerglotzError::Gate(_))));
        let g = GridOverrides { k: Some(vec![1.5]), ..Default::default() };
        assert!(suite_tasks(Suite::Thm28, &g, 30).is_err());
    }

    #[test]
    fn fe_zagier_passes() {
        let cfg = RunConfig::default();
        let tasks = suite_tasks(Suite::FeZagier, &GridOverrides::default(), 30).unwrap();
        assert_eq!(tasks.len(), 12);
        let reports = run_tasks(&tasks, &cfg).unwrap();
        assert!(reports.iter().all(|r| r.pass && r.abs_residual < 1e-9));
        assert!(reports.iter().all(|r| r.runtime_ms == 0.0));
    }
}
