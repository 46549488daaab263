//! Run a verification suite through the same code path as `herglotz-lab verify`
//! and print the JSON report.

use herglotz_lab::cli::{format_reports, verify_reports, OutputFormat, RunConfig};

fn main() -> herglotz_lab::Result<()> {
    let suite = std::env::args().nth(1).unwrap_or_else(|| "raabe".to_string());
    let cfg = RunConfig::default();
    let reports = verify_reports(&suite, &cfg)?;
    print!("{}", format_reports(&reports, OutputFormat::Text));
    print!("{}", format_reports(&reports, OutputFormat::Json));
    Ok(())
}
