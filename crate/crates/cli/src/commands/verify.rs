use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use fracdiff_core::verify::{family_names, run_identity_suite, Report};

use crate::error::{CliError, CliResult};
use crate::output;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run every check family (the default).
    #[arg(long, conflicts_with = "only")]
    pub all: bool,
    /// Comma-separated family names or aliases.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Write the JSON report to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Tolerance override `family=value`; repeatable.
    #[arg(long, value_parser = parse_override)]
    pub tol: Vec<(String, f64)>,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let tol: f64 = value.trim().parse().map_err(|_| format!("bad tolerance {value:?}"))?;
    Ok((name.trim().to_string(), tol))
}

pub fn run(a: &VerifyArgs) -> CliResult<()> {
    let selection: BTreeSet<String> = if a.only.is_empty() {
        family_names().into_iter().map(String::from).collect()
    } else {
        a.only
            .iter()
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    };
    if selection.is_empty() {
        return Err(CliError::invalid("empty check selection"));
    }
    let tols: BTreeMap<String, f64> = a.tol.iter().cloned().collect();
    let checks = run_identity_suite(&selection, &tols).map_err(|e| CliError::from_core("selection", e))?;
    let report = Report::new(checks);

    let mut w = output::stdout();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        match &c.error {
            Some(e) => writeln!(w, "{status} {} error: {e}", c.name)?,
            None => writeln!(w, "{status} {} abs_err={:.3e} tol={:.1e}", c.name, c.abs_err, c.tol)?,
        }
    }
    let s = report.summary;
    writeln!(w, "total={} passed={} failed={}", s.total, s.passed, s.failed)?;
    w.flush()?;
    if let Some(path) = &a.json {
        std::fs::write(path, report.to_json())?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::ChecksFailed(format!(
            "{} of {} checks failed",
            s.failed, s.total
        )))
    }
}
