//! Report plumbing: deterministic CSV rows plus a JSON sidecar carrying the
//! summary and provenance.

use crate::config::ScanConfig;
use mcglab_core::profile::CalibrationProfile;
use std::io::Write;
use std::path::Path;

pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub columns: Vec<String>,
    /// Pre-formatted cells: integers in decimal, rationals as p/q strings.
    pub rows: Vec<Vec<String>>,
    pub summary: serde_json::Value,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl ScanReport {
    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("csv header");
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.columns.len());
            w.write_record(row).expect("csv row");
        }
        w.into_inner().expect("csv buffer")
    }

    pub fn sidecar(&self, cfg: &ScanConfig, profile: &CalibrationProfile) -> serde_json::Value {
        serde_json::json!({
            "summary": self.summary,
            "passed": self.passed,
            "failures": self.failures,
            "provenance": {
                "config": cfg.echo(),
                "code_version": CODE_VERSION,
                "profile_version": profile.version,
            },
        })
    }
}

/// Writes the CSV to `cfg.out` and the sidecar next to it with a `.json`
/// extension.
pub fn write_outputs(
    report: &ScanReport,
    cfg: &ScanConfig,
    profile: &CalibrationProfile,
) -> std::io::Result<()> {
    write_file(&cfg.out, &report.csv_bytes())?;
    let sidecar = cfg.out.with_extension("json");
    let body = serde_json::to_string_pretty(&report.sidecar(cfg, profile)).expect("sidecar json");
    write_file(&sidecar, body.as_bytes())
}

fn write_file(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(bytes)?;
    if !bytes.ends_with(b"\n") {
        f.write_all(b"\n")?;
    }
    Ok(())
}
