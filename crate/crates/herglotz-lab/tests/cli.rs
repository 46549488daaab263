use herglotz_lab::cli::{covered_identities, Suite};
use herglotz_lab::identities::IdentityReport;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::{Command, Output};

const EULER: f64 = 0.577_215_664_901_532_860_606_512_090_082;
const GAMMA1: f64 = -0.072_815_845_483_676_724_860_586_375_874_9;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_herglotz-lab"));
    c.env_remove("HERGLOTZ_LAB_CONFIG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("herglotz-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Column `col` of the data rows of a CSV table.
fn csv_column(text: &str, col: usize) -> Vec<String> {
    text.lines().skip(1).map(|l| l.split(',').nth(col).unwrap().to_string()).collect()
}

#[test]
fn eval_herglotz_at_one() {
    let o = run(&["eval", "F", "--x", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = csv_column(&stdout(&o), 2)[0].parse().unwrap();
    assert!((v - (-EULER * EULER / 2.0 - PI * PI / 12.0 - GAMMA1)).abs() < 1e-12);
    let same = run(&["eval", "FkN", "--k", "1", "--N", "1", "--x", "1", "--format", "csv"]);
    assert_eq!(csv_column(&stdout(&same), 2), csv_column(&stdout(&o), 2));
}

#[test]
fn eval_j_at_two_fifths() {
    let o = run(&["eval", "J", "--x", "0.4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let v: f64 = csv_column(&stdout(&o), 2)[0].parse().unwrap();
    let phi = (5f64.sqrt() + 1.0) / 2.0;
    let ln2 = 2f64.ln();
    assert!((v - (11.0 * PI * PI / 240.0 + 0.75 * ln2 * ln2 - 2.0 * phi.ln().powi(2))).abs() < 1e-10);
}

#[test]
fn eval_other_functions() {
    for args in [
        vec!["eval", "Fk", "--k", "2", "--x", "1.5"],
        vec!["eval", "polylog", "--s", "2", "--x", "0.5"],
        vec!["eval", "gen_polylog", "--N", "2", "--s", "2", "--x", "-0.5"],
        vec!["eval", "JkN", "--k", "2", "--N", "3", "--x", "1"],
        vec!["eval", "lambert", "--p", "-3", "--N", "1", "--alpha", "1"],
        vec!["eval", "F", "--x", "1,2,0.5+1.5i", "--format", "text"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn domain_and_config_errors_exit_2() {
    for args in [
        vec!["eval", "F", "--x", "-1"],
        vec!["eval", "nope", "--x", "1"],
        vec!["eval", "F"],
        vec!["verify", "thm21", "--k", "5", "--N", "3"],
        vec!["verify", "thm99"],
        vec!["verify", "fe-zagier", "--tolerance", "1e-30"],
        vec!["verify", "fe-zagier", "--precision", "32"],
        vec!["verify", "fe-zagier", "--format", "yaml"],
        vec!["asym", "FkN-inf", "--k", "2", "--N", "3", "--x", ""],
        vec!["asym", "FkN-inf", "--k", "2", "--N", "3"],
        vec!["asym", "nowhere", "--x", "1"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_fe_zagier_passes() {
    let o = run(&["verify", "fe-zagier"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<IdentityReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 12);
    assert!(reports.iter().all(|r| r.pass && r.abs_residual < 1e-9));
}

#[test]
fn failing_check_exits_1() {
    // far outside the validation region the N = 3 Lambert expansion misses its
    // bound by the exponentially small term
    let o = run(&["asym", "lambert", "--m", "1", "--N", "3", "--alpha", "0.1,0.05", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(csv_column(&stdout(&o), 8).iter().all(|c| c == "false"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "fe-vz", "--parallelism", "1"]);
    let b = run(&["verify", "fe-vz", "--parallelism", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports: Vec<IdentityReport> = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(reports.iter().all(|r| r.runtime_ms == 0.0));
    let timed = run(&["verify", "fe-vz", "--timings"]);
    let reports: Vec<IdentityReport> = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(reports.iter().any(|r| r.runtime_ms > 0.0));
}

#[test]
fn tolerance_flag_sets_the_floor() {
    let o = run(&["verify", "cor24", "--tolerance", "1e-6"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<IdentityReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(reports.iter().all(|r| r.tolerance == 1e-6));
}

#[test]
fn asym_table_contract() {
    let o = run(&["asym", "FkN-inf", "--k", "2", "--N", "3", "--x", "20,40,80", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("x_re,x_im,direct_re"));
    let diffs: Vec<f64> = csv_column(&text, 6).iter().map(|s| s.parse().unwrap()).collect();
    let bounds: Vec<f64> = csv_column(&text, 7).iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(diffs.len(), 3);
    assert!(diffs.windows(2).all(|w| w[1] <= w[0]));
    assert!(diffs.iter().zip(&bounds).all(|(d, b)| d <= b));
    // with two terms the error is dominated by the first omitted term and falls strictly
    let o = run(&["asym", "FkN-inf", "--k", "2", "--N", "3", "--x", "20,40,80", "--terms", "2", "--format", "csv"]);
    let diffs: Vec<f64> = csv_column(&stdout(&o), 6).iter().map(|s| s.parse().unwrap()).collect();
    assert!(diffs.windows(2).all(|w| w[1] < w[0]), "{diffs:?}");
    let o = run(&["asym", "lambert", "--m", "1", "--N", "3", "--alpha", "0.002,0.001"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn config_file_env_and_flag_precedence() {
    let path = scratch("run.cfg");
    std::fs::write(&path, "# test config\nformat = csv\ntolerance = 1e-6\nx = 1, 2\n").unwrap();
    let o = bin().args(["eval", "F"]).env("HERGLOTZ_LAB_CONFIG", &path).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("function,params"));
    assert_eq!(text.lines().count(), 3);
    let o = bin().args(["eval", "F", "--format", "json", "--x", "3"]).env("HERGLOTZ_LAB_CONFIG", &path).output().unwrap();
    assert!(stdout(&o).starts_with('['));
    let o = run(&["eval", "F", "--config", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("function,params"));
    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(run(&["eval", "F", "--x", "1", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("modular.json");
    let o = run(&["verify", "modular", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let reports: Vec<IdentityReport> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports.iter().all(|r| !r.notes.is_empty()));
}

#[test]
fn verify_all_covers_every_identity() {
    let expected = [
        "asym_FkN-inf",
        "asym_FkN-zero",
        "asym_lambert",
        "asym_pair-inf",
        "asym_pair-zero",
        "companion",
        "cor210",
        "cor24",
        "cor29",
        "equivalence",
        "fe1",
        "fe2",
        "modular",
        "raabe",
        "ramanujan",
        "thm21",
        "thm211",
        "thm212",
        "thm21_k1",
        "thm22",
        "thm23",
        "thm28",
        "trans4m1",
        "vz1",
        "vz2",
        "zetagen_a",
    ];
    let mut expected = expected.to_vec();
    expected.sort_unstable();
    assert_eq!(covered_identities(&Suite::ALL), expected);
}
