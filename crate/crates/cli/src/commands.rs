use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use qgwalk_core::dual::DualWalk;
use qgwalk_core::idempotents::{verify_central_idempotents, DEFAULT_PROBES};
use qgwalk_core::kp8::KpWalk;
use qgwalk_core::walks::{cutoff_table, LimitClassification, Walk, WalkReport};

use crate::config::{parse_config, Driver, WalkConfig};
use crate::error::{CliError, Result};
use crate::report;

pub fn load_config(path: &Path) -> Result<WalkConfig> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text)
}

pub fn trace(config: &WalkConfig) -> Result<WalkReport> {
    let tol = config.tolerance()?;
    let k = config.k_max;
    Ok(match config.driver()? {
        Driver::Kp(g) => KpWalk::new(g, tol)?.trace(k)?,
        Driver::Kpn(a) => Walk::new(a, tol)?.trace(k)?,
        Driver::Dual(a) => DualWalk::new(a, tol)?.trace(k)?,
    })
}

pub fn classify(config: &WalkConfig) -> Result<LimitClassification> {
    let tol = config.tolerance()?;
    Ok(match config.driver()? {
        Driver::Kp(g) => KpWalk::new(g, tol)?.classify()?,
        Driver::Kpn(a) => Walk::new(a, tol)?.classify()?,
        Driver::Dual(a) => DualWalk::new(a, tol)?.classify()?,
    })
}

/// `trace.csv` → `trace.meta.json`.
pub fn sidecar_path(csv: &Path) -> PathBuf {
    csv.with_extension("meta.json")
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// Output of `run`: the CSV trace and its metadata.
pub struct RunOutput {
    pub csv: String,
    pub meta: Value,
}

pub fn run(config: &WalkConfig) -> Result<RunOutput> {
    let report = trace(config)?;
    Ok(RunOutput {
        csv: report::trace_csv(&report)?,
        meta: report::meta_json(&report, config.tolerance()?),
    })
}

/// Writes the trace to `out` (or the config's `output`) plus a sidecar;
/// without a path the CSV is returned for stdout and the metadata for stderr.
pub fn run_to(config: &WalkConfig, out: Option<&Path>) -> Result<Option<RunOutput>> {
    let output = run(config)?;
    match out.or(config.output.as_deref()) {
        Some(path) => {
            write(path, &output.csv)?;
            write(
                &sidecar_path(path),
                &format!("{}\n", serde_json::to_string(&output.meta)?),
            )?;
            Ok(None)
        }
        None => Ok(Some(output)),
    }
}

pub fn idempotents(n: usize, tol: f64) -> Result<Value> {
    let list = verify_central_idempotents(n, DEFAULT_PROBES, tol)?;
    Ok(report::idempotents_json(n, &list))
}

pub fn cutoff(ns: &[usize], cs: &[f64]) -> Result<String> {
    report::cutoff_csv(&cutoff_table(ns, cs)?)
}

pub fn cutoff_to(ns: &[usize], cs: &[f64], dir: Option<&Path>) -> Result<Option<String>> {
    let csv = cutoff(ns, cs)?;
    match dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            write(&dir.join("cutoff.csv"), &csv)?;
            Ok(None)
        }
        None => Ok(Some(csv)),
    }
}
