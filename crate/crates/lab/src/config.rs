//! Scan configuration: the merged view of CLI flags and an optional JSON
//! config file, validated before any work starts.

use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[clap(rename_all = "snake_case")]
pub enum ScanKind {
    Behrstock,
    EmProjection,
    DistanceFormula,
    Hyperbolicity,
    Orbit,
    Divergence,
    Contraction,
    Calibrate,
}

impl ScanKind {
    pub fn name(&self) -> &'static str {
        match self {
            ScanKind::Behrstock => "behrstock",
            ScanKind::EmProjection => "em_projection",
            ScanKind::DistanceFormula => "distance_formula",
            ScanKind::Hyperbolicity => "hyperbolicity",
            ScanKind::Orbit => "orbit",
            ScanKind::Divergence => "divergence",
            ScanKind::Contraction => "contraction",
            ScanKind::Calibrate => "calibrate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    S11,
    S04,
    S05,
}

impl SurfaceKind {
    pub fn name(&self) -> &'static str {
        match self {
            SurfaceKind::S11 => "s11",
            SurfaceKind::S04 => "s04",
            SurfaceKind::S05 => "s05",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub scan: ScanKind,
    pub surface: SurfaceKind,
    pub seed: u64,
    pub samples: u64,
    pub radius: Option<u32>,
    pub threshold: Option<i64>,
    pub word_length: Option<u32>,
    pub window: Option<u32>,
    pub out: PathBuf,
}

#[derive(Debug)]
pub enum ConfigError {
    Invalid(String),
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Invalid(m) => write!(f, "invalid configuration: {m}"),
        }
    }
}

impl std::error::Error for ConfigError {}

fn err(m: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(m.into())
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        use ScanKind::*;
        use SurfaceKind::*;
        match self.scan {
            Behrstock => {
                if self.surface != S05 {
                    return Err(err("behrstock runs on s05 only"));
                }
            }
            EmProjection | DistanceFormula | Orbit | Contraction => {
                if self.surface == S05 {
                    return Err(err(format!("{} needs s11 or s04", self.scan.name())));
                }
            }
            Divergence => {
                if self.surface != S11 {
                    return Err(err("divergence runs on s11 only"));
                }
                if self.radius.unwrap_or(0) > 6 {
                    return Err(err("divergence radius is capped at 6"));
                }
            }
            Hyperbolicity | Calibrate => {}
        }
        if self.scan == DistanceFormula {
            if let Some(t) = self.threshold {
                if t < 10 {
                    return Err(err("distance_formula threshold must be at least 10"));
                }
            }
        }
        if let Some(r) = self.radius {
            if r > mcglab_core::markings::DEFAULT_RADIUS_CAP {
                return Err(err(format!(
                    "radius {r} exceeds cap {}",
                    mcglab_core::markings::DEFAULT_RADIUS_CAP
                )));
            }
        }
        if let Some(w) = self.window {
            if w == 0 {
                return Err(err("window must be positive"));
            }
        }
        if let Some(w) = self.word_length {
            if w == 0 {
                return Err(err("word_length must be positive"));
            }
        }
        Ok(())
    }

    /// The config echo embedded in every report sidecar.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::json!({
            "scan": self.scan.name(),
            "surface": self.surface.name(),
            "seed": self.seed,
            "samples": self.samples,
            "radius": self.radius,
            "threshold": self.threshold,
            "word_length": self.word_length,
            "window": self.window,
            "out": self.out.display().to_string(),
        })
    }
}

/// The JSON config file mirrors the flags; any field may be omitted.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub scan: Option<ScanKind>,
    pub surface: Option<SurfaceKind>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub radius: Option<u32>,
    pub threshold: Option<i64>,
    pub word_length: Option<u32>,
    pub window: Option<u32>,
    pub out: Option<PathBuf>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(scan: ScanKind, surface: SurfaceKind) -> ScanConfig {
        ScanConfig {
            scan,
            surface,
            seed: 0,
            samples: 10,
            radius: None,
            threshold: None,
            word_length: None,
            window: None,
            out: PathBuf::from("/tmp/out.csv"),
        }
    }

    #[test]
    fn surface_restrictions() {
        assert!(base(ScanKind::Behrstock, SurfaceKind::S05).validate().is_ok());
        assert!(base(ScanKind::Behrstock, SurfaceKind::S11).validate().is_err());
        assert!(base(ScanKind::EmProjection, SurfaceKind::S05).validate().is_err());
        assert!(base(ScanKind::Divergence, SurfaceKind::S04).validate().is_err());
        assert!(base(ScanKind::Hyperbolicity, SurfaceKind::S05).validate().is_ok());
    }

    #[test]
    fn threshold_floor() {
        let mut c = base(ScanKind::DistanceFormula, SurfaceKind::S11);
        c.threshold = Some(9);
        assert!(c.validate().is_err());
        c.threshold = Some(10);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn file_config_round_trip() {
        let j = r#"{"surface": "s11", "samples": 5}"#;
        let f: FileConfig = serde_json::from_str(j).unwrap();
        assert_eq!(f.surface, Some(SurfaceKind::S11));
        assert_eq!(f.samples, Some(5));
        assert!(serde_json::from_str::<FileConfig>(r#"{"bogus": 1}"#).is_err());
    }
}
