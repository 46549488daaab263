//! Command-line front end: `herglotz-lab {eval|verify|asym} [flags]`.
//!
//! Settings are layered: defaults, then a flat `key=value` config file (from
//! `--config` or the `HERGLOTZ_LAB_CONFIG` environment variable), then flags.
//! Exit codes: 0 success, 1 a check failed, 2 usage, configuration or domain error.

pub mod config;
pub mod parse;
pub mod suites;

pub use config::{GridOverrides, OutputFormat, RunConfig, CONFIG_ENV};
pub use suites::{covered_identities, run_tasks, suite_tasks, Suite, Task, ASYM_POINTS};

use crate::asym::{asym_row, AsymParams, AsymRow, AsymTarget};
use crate::error::{HerglotzError, Result};
use crate::herglotz::{ext_f, herglotz_f, higher_f_k, EvalOutcome, HerglotzParams, Method, DEFAULT_TOL};
use crate::identities::{json_str, num, reports_to_json, IdentityReport, ParamValue, Params};
use crate::lambert::{lambert_sum, LambertSpec};
use crate::params;
use crate::quadrature::{j_integral, j_kn};
use crate::special::{gen_polylog, polylog};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "herglotz-lab", version, about = "Evaluate extended higher Herglotz functions and verify their identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function: F, Fk, FkN, polylog, gen_polylog, J, JkN or lambert.
    Eval { function: String },
    /// Run a verification suite (or `all`) and write a JSON array of reports.
    Verify { suite: String },
    /// Compare an asymptotic expansion with direct evaluation:
    /// FkN-inf, FkN-zero, pair-inf, pair-zero or lambert.
    Asym { target: String },
}

/// Flags shared by every subcommand. Lists are comma-separated.
#[derive(Debug, Default, Args)]
pub struct Flags {
    #[arg(long, global = true)]
    pub k: Option<String>,
    #[arg(long = "N", global = true)]
    pub big_n: Option<String>,
    /// Points such as 0.3, 2pi, 1/3, 0.5+1.5i.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long, global = true)]
    pub alpha: Option<String>,
    /// Shift parameter of the Lambert series.
    #[arg(long, global = true)]
    pub a: Option<String>,
    /// Order s of polylog and gen_polylog.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Power p of the Lambert series numerator n^p.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, global = true)]
    pub tolerance: Option<String>,
    #[arg(long, global = true)]
    pub precision: Option<String>,
    /// json, csv or text.
    #[arg(long, global = true)]
    pub format: Option<String>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub parallelism: Option<String>,
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Maximum number of expansion terms for asymptotic comparisons.
    #[arg(long, global = true)]
    pub terms: Option<String>,
    /// Record per-report wall-clock time (output is then not reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

/// Layer config file and flags over the defaults.
pub fn build_config(flags: &Flags, env_config: Option<PathBuf>) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = flags.config.clone().or(env_config) {
        cfg.apply_file(&path)?;
    }
    let pairs = [
        ("k", &flags.k),
        ("N", &flags.big_n),
        ("x", &flags.x),
        ("m", &flags.m),
        ("alpha", &flags.alpha),
        ("a", &flags.a),
        ("tolerance", &flags.tolerance),
        ("precision", &flags.precision),
        ("format", &flags.format),
        ("parallelism", &flags.parallelism),
        ("terms", &flags.terms),
    ];
    for (key, value) in pairs {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if let Some(out) = &flags.out {
        cfg.out = Some(out.clone());
    }
    if flags.timings {
        cfg.timings = true;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Text produced by a command and the exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

/// Parse arguments, run, write output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let env_config = std::env::var_os(CONFIG_ENV).map(PathBuf::from);
    let result = build_config(&cli.flags, env_config).and_then(|cfg| {
        let out = run(&cli.command, &cli.flags, &cfg)?;
        emit(&out.body, cfg.out.as_deref())?;
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("herglotz-lab: {e}");
            2
        }
    }
}

fn emit(body: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| HerglotzError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes()).map_err(|e| HerglotzError::Config(format!("cannot write output: {e}")))
        }
    }
}

/// Run a parsed command with a validated config.
pub fn run(command: &Command, flags: &Flags, cfg: &RunConfig) -> Result<Output> {
    match command {
        Command::Eval { function } => cmd_eval(function, flags, cfg),
        Command::Verify { suite } => cmd_verify(suite, cfg),
        Command::Asym { target } => cmd_asym(target, cfg),
    }
}

fn first<T: Copy>(v: &Option<Vec<T>>, name: &str) -> Result<T> {
    match v.as_deref() {
        Some([t]) => Ok(*t),
        Some(_) => Err(HerglotzError::Config(format!("--{name} takes a single value here"))),
        None => Err(HerglotzError::Config(format!("--{name} is required"))),
    }
}

fn first_or<T: Copy>(v: &Option<Vec<T>>, name: &str, default: T) -> Result<T> {
    if v.is_none() {
        Ok(default)
    } else {
        first(v, name)
    }
}

fn nonempty<T: Clone>(v: &Option<Vec<T>>, name: &str) -> Result<Vec<T>> {
    match v {
        Some(list) if !list.is_empty() => Ok(list.clone()),
        Some(_) => Err(HerglotzError::Config(format!("--{name} list is empty"))),
        None => Err(HerglotzError::Config(format!("--{name} is required"))),
    }
}

fn real_of(x: Complex64, what: &str) -> Result<f64> {
    if x.im == 0.0 {
        Ok(x.re)
    } else {
        Err(HerglotzError::Domain(format!("{what} must be real, got {x}")))
    }
}

fn int_of(v: f64, what: &str) -> Result<u32> {
    if v >= 1.0 && v == v.floor() && v < 1e6 {
        Ok(v as u32)
    } else {
        Err(HerglotzError::Domain(format!("{what} must be a positive integer, got {v}")))
    }
}

fn quad(q: crate::quadrature::QuadResult) -> EvalOutcome {
    EvalOutcome { value: q.value, abs_err: q.abs_err, terms_used: q.panels as u64, method: Method::Quadrature }
}

fn exact(value: Complex64, terms: u64) -> EvalOutcome {
    EvalOutcome { value, abs_err: 4.0 * f64::EPSILON * value.norm(), terms_used: terms, method: Method::DirectSum }
}

/// One evaluated record of `eval`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalRecord {
    pub function: String,
    pub params: Params,
    pub outcome: EvalOutcome,
}

/// Evaluate a function at every point of `--x` (or `--alpha` for lambert).
pub fn eval_records(function: &str, flags: &Flags, cfg: &RunConfig) -> Result<Vec<EvalRecord>> {
    let g = &cfg.grid;
    let scalar = |s: &Option<String>, name: &str| -> Result<Option<f64>> {
        s.as_deref().map(parse::parse_real).transpose().map_err(|_| HerglotzError::Config(format!("bad --{name}")))
    };
    let points = if function.eq_ignore_ascii_case("lambert") { nonempty(&g.alpha, "alpha")? } else { nonempty(&g.x, "x")? };
    let mut records = Vec::with_capacity(points.len());
    for x in points {
        let (params, outcome): (Params, EvalOutcome) = match function {
            "F" => (params!("x" => x), herglotz_f(x)?),
            "Fk" => {
                let k = int_of(first(&g.k, "k")?, "k")?;
                (params!("k" => k, "x" => x), higher_f_k(k, x)?)
            }
            "FkN" => {
                let k = first(&g.k, "k")?;
                let n = first(&g.big_n, "N")? as f64;
                (params!("k" => k, "N" => n, "x" => x), ext_f(HerglotzParams::new(k, n)?, x, DEFAULT_TOL)?)
            }
            "polylog" => {
                let s = scalar(&flags.s, "s")?.ok_or_else(|| HerglotzError::Config("--s is required".into()))?;
                (params!("s" => s, "t" => x), exact(polylog(s, x)?, 0))
            }
            "gen_polylog" => {
                let s = scalar(&flags.s, "s")?.ok_or_else(|| HerglotzError::Config("--s is required".into()))?;
                let n = first(&g.big_n, "N")?;
                (params!("N" => n, "s" => s, "t" => x), exact(gen_polylog(n, s, x)?, 0))
            }
            "J" => (params!("x" => x), quad(j_integral(real_of(x, "x")?)?)),
            "JkN" => {
                let k = int_of(first(&g.k, "k")?, "k")?;
                let n = first(&g.big_n, "N")?;
                (params!("k" => k, "N" => n, "x" => x), quad(j_kn(k, n, real_of(x, "x")?)?))
            }
            "lambert" => {
                let p = scalar(&flags.p, "p")?.unwrap_or(0.0);
                let n = first_or(&g.big_n, "N", 1)?;
                let a = first_or(&g.a, "a", 1.0)?;
                let spec = LambertSpec::with_shift(p, n, x, a)?;
                (params!("p" => p, "N" => n, "alpha" => x, "a" => a), lambert_sum(spec, 1e-16)?)
            }
            other => return Err(HerglotzError::Config(format!("unknown function '{other}'"))),
        };
        records.push(EvalRecord { function: function.to_string(), params, outcome });
    }
    Ok(records)
}

fn param_text(v: &ParamValue) -> String {
    match v {
        ParamValue::Int(i) => i.to_string(),
        ParamValue::Real(x) => format!("{x}"),
        ParamValue::Complex([re, im]) => format!("{re}{}{}i", if *im < 0.0 { "-" } else { "+" }, im.abs()),
    }
}

fn params_text(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={}", param_text(v))).collect::<Vec<_>>().join(";")
}

fn params_json(p: &Params) -> String {
    let fields: Vec<String> = p
        .iter()
        .map(|(k, v)| {
            let val = match v {
                ParamValue::Int(i) => i.to_string(),
                ParamValue::Real(x) => num(*x),
                ParamValue::Complex([re, im]) => format!("[{},{}]", num(*re), num(*im)),
            };
            format!("{}:{val}", json_str(k))
        })
        .collect();
    format!("{{{}}}", fields.join(","))
}

fn complex_text(z: Complex64) -> String {
    format!("{:.16e} {} {:.16e}i", z.re, if z.im < 0.0 { "-" } else { "+" }, z.im.abs())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn cmd_eval(function: &str, flags: &Flags, cfg: &RunConfig) -> Result<Output> {
    let records = eval_records(function, flags, cfg)?;
    let mut s = String::new();
    match cfg.output_format {
        OutputFormat::Json => {
            s.push_str("[\n");
            for (i, r) in records.iter().enumerate() {
                let o = &r.outcome;
                write!(
                    s,
                    "  {{\"function\":{},\"params\":{},\"value\":[{},{}],\"abs_err\":{},\"method\":{},\"terms_used\":{}}}",
                    json_str(&r.function),
                    params_json(&r.params),
                    num(o.value.re),
                    num(o.value.im),
                    num(o.abs_err),
                    json_str(o.method.as_str()),
                    o.terms_used
                )
                .unwrap();
                s.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
            }
            s.push_str("]\n");
        }
        OutputFormat::Csv => {
            s.push_str("function,params,value_re,value_im,abs_err,method,terms_used\n");
            for r in &records {
                let o = &r.outcome;
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.function,
                    csv_field(&params_text(&r.params)),
                    num(o.value.re),
                    num(o.value.im),
                    num(o.abs_err),
                    o.method.as_str(),
                    o.terms_used
                )
                .unwrap();
            }
        }
        OutputFormat::Text => {
            for r in &records {
                let o = &r.outcome;
                writeln!(
                    s,
                    "{}({}) = {}  ± {:.2e}  [{}, {} terms]",
                    r.function,
                    params_text(&r.params),
                    complex_text(o.value),
                    o.abs_err,
                    o.method.as_str(),
                    o.terms_used
                )
                .unwrap();
            }
        }
    }
    Ok(Output { body: s, code: 0 })
}

/// Run suites and collect reports in suite and grid order.
pub fn verify_reports(selection: &str, cfg: &RunConfig) -> Result<Vec<IdentityReport>> {
    let suites = Suite::parse_selection(selection)?;
    let mut tasks = Vec::new();
    for s in suites {
        tasks.extend(suite_tasks(s, &cfg.grid, cfg.terms)?);
    }
    run_tasks(&tasks, cfg)
}

/// Reports in the configured format.
pub fn format_reports(reports: &[IdentityReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => reports_to_json(reports),
        OutputFormat::Csv => {
            let mut s = String::from(
                "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,lhs_err,rhs_err,abs_residual,rel_residual,tolerance,pass,terms_used,runtime_ms,notes\n",
            );
            for r in reports {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.identity,
                    csv_field(&params_text(&r.params)),
                    num(r.lhs[0]),
                    num(r.lhs[1]),
                    num(r.rhs[0]),
                    num(r.rhs[1]),
                    num(r.lhs_err),
                    num(r.rhs_err),
                    num(r.abs_residual),
                    num(r.rel_residual),
                    num(r.tolerance),
                    r.pass,
                    r.terms_used,
                    num(r.runtime_ms),
                    csv_field(&r.notes.join(" | "))
                )
                .unwrap();
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for r in reports {
                writeln!(
                    s,
                    "{:<5} {:<16} {:<40} residual {:.3e}  tolerance {:.3e}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.identity,
                    params_text(&r.params),
                    r.abs_residual,
                    r.tolerance
                )
                .unwrap();
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(s, "{} reports, {} failed", reports.len(), failed).unwrap();
            s
        }
    }
}

pub fn cmd_verify(selection: &str, cfg: &RunConfig) -> Result<Output> {
    let reports = verify_reports(selection, cfg)?;
    let code = if reports.iter().all(|r| r.pass) { 0 } else { 1 };
    Ok(Output { body: format_reports(&reports, cfg.output_format), code })
}

/// Rows of an asymptotic comparison. The points come from `--x`, or from
/// `--alpha` for the Lambert target.
pub fn asym_rows(target: &str, cfg: &RunConfig) -> Result<(AsymTarget, AsymParams, Vec<AsymRow>)> {
    let target: AsymTarget = target.parse()?;
    let g = &cfg.grid;
    let points = if target == AsymTarget::Lambert && g.alpha.is_some() { nonempty(&g.alpha, "alpha")? } else { nonempty(&g.x, "x")? };
    let m = first_or(&g.m, "m", 1)?;
    if m < 1 {
        return Err(HerglotzError::Config(format!("m must be positive, got {m}")));
    }
    let p = AsymParams {
        k: first_or(&g.k, "k", 1.0)?,
        big_n: first_or(&g.big_n, "N", 1)? as f64,
        m: m as u32,
        terms: cfg.terms,
    };
    let rows = points.iter().map(|&x| asym_row(target, p, x)).collect::<Result<Vec<_>>>()?;
    Ok((target, p, rows))
}

pub fn cmd_asym(target: &str, cfg: &RunConfig) -> Result<Output> {
    let (target, p, rows) = asym_rows(target, cfg)?;
    let var = if target == AsymTarget::Lambert { "alpha" } else { "x" };
    let mut s = String::new();
    match cfg.output_format {
        OutputFormat::Json => {
            let params = if target == AsymTarget::Lambert {
                params!("m" => p.m, "N" => p.big_n, "terms" => p.terms as i64)
            } else {
                params!("k" => p.k, "N" => p.big_n, "terms" => p.terms as i64)
            };
            s.push_str("[\n");
            for (i, r) in rows.iter().enumerate() {
                write!(
                    s,
                    "  {{\"target\":{},\"params\":{},\"{var}\":[{},{}],\"direct\":[{},{}],\"asymptotic\":[{},{}],\"abs_diff\":{},\"remainder_bound\":{},\"within_bound\":{}}}",
                    json_str(target.as_str()),
                    params_json(&params),
                    num(r.x.re),
                    num(r.x.im),
                    num(r.direct.value.re),
                    num(r.direct.value.im),
                    num(r.asymptotic.value.re),
                    num(r.asymptotic.value.im),
                    num(r.abs_diff),
                    num(r.bound),
                    r.within_bound()
                )
                .unwrap();
                s.push_str(if i + 1 < rows.len() { ",\n" } else { "\n" });
            }
            s.push_str("]\n");
        }
        OutputFormat::Csv => {
            writeln!(s, "{var}_re,{var}_im,direct_re,direct_im,asymptotic_re,asymptotic_im,abs_diff,remainder_bound,within_bound").unwrap();
            for r in &rows {
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{}",
                    num(r.x.re),
                    num(r.x.im),
                    num(r.direct.value.re),
                    num(r.direct.value.im),
                    num(r.asymptotic.value.re),
                    num(r.asymptotic.value.im),
                    num(r.abs_diff),
                    num(r.bound),
                    r.within_bound()
                )
                .unwrap();
            }
        }
        OutputFormat::Text => {
            writeln!(s, "{:>12}  {:>24}  {:>24}  {:>10}  {:>10}", var, "direct", "asymptotic", "|diff|", "bound").unwrap();
            for r in &rows {
                writeln!(
                    s,
                    "{:>12}  {:>24.16e}  {:>24.16e}  {:>10.3e}  {:>10.3e}{}",
                    param_text(&ParamValue::from(r.x)),
                    r.direct.value.re,
                    r.asymptotic.value.re,
                    r.abs_diff,
                    r.bound,
                    if r.within_bound() { "" } else { "  exceeds bound" }
                )
                .unwrap();
            }
        }
    }
    let code = if rows.iter().all(AsymRow::within_bound) { 0 } else { 1 };
    Ok(Output { body: s, code })
}
