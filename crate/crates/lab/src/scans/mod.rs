//! The scan drivers.  Each scan maps a validated config to a ScanReport;
//! per-sample work fans out over a worker pool and is keyed by sample index,
//! so the row set is independent of scheduling.

use crate::config::{ScanConfig, ScanKind};
use crate::report::ScanReport;
use mcglab_core::profile::CalibrationProfile;
use rayon::prelude::*;

pub mod behrstock;
pub mod calibrate;
pub mod contraction;
pub mod distance_formula;
pub mod divergence;
pub mod em_projection;
pub mod hyperbolicity;
pub mod orbit;

pub fn run_scan(cfg: &ScanConfig, profile: &CalibrationProfile) -> ScanReport {
    match cfg.scan {
        ScanKind::Behrstock => behrstock::run(cfg),
        ScanKind::EmProjection => em_projection::run(cfg),
        ScanKind::DistanceFormula => distance_formula::run(cfg),
        ScanKind::Hyperbolicity => hyperbolicity::run(cfg, profile),
        ScanKind::Orbit => orbit::run(cfg),
        ScanKind::Divergence => divergence::run(cfg),
        ScanKind::Contraction => contraction::run(cfg, profile),
        ScanKind::Calibrate => calibrate::run(cfg),
    }
}

/// Maps sample indices to row blocks in parallel and flattens them in index
/// order, so the emitted rows are byte-stable under any worker count.
pub(crate) fn par_rows<F>(samples: u64, f: F) -> Vec<Vec<String>>
where
    F: Fn(u64) -> Vec<Vec<String>> + Sync + Send,
{
    let blocks: Vec<Vec<Vec<String>>> = (0..samples).into_par_iter().map(f).collect();
    blocks.into_iter().flatten().collect()
}

pub(crate) fn cell(x: impl std::fmt::Display) -> String {
    x.to_string()
}
