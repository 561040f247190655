//! mcglab: scan drivers turning the exact curve-complex machinery into
//! reproducible experiments with seeded randomness, CSV rows, and a JSON
//! summary sidecar.

pub mod config;
pub mod report;
pub mod rng;
pub mod s05;
pub mod scans;

pub use config::{ScanConfig, ScanKind, SurfaceKind};
pub use report::{write_outputs, ScanReport};
pub use scans::run_scan;
