//! Calibration profiles: the empirically fitted constants that parameterize
//! hierarchy audits, with every threshold derived rather than set by hand.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("delta_prime must equal 4·delta + 5 (got {got}, expected {expected})")]
    DeltaPrimeMismatch { got: i64, expected: i64 },
    #[error("m must equal max(m1 + 2, m2 + 3) (got {got}, expected {expected})")]
    MMismatch { got: i64, expected: i64 },
}

/// Provenance of a fit: enough to reproduce it byte-for-byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitMetadata {
    pub samples: u64,
    pub seed: u64,
    pub notes: String,
}

/// The constants governing large-domain bookkeeping and contraction audits.
///
/// `m`, `delta_prime` and the thresholds are always derived:
/// m = max(m1 + 2, m2 + 3), δ′ = 4δ + 5, and the three thresholds are
/// 6m + 4δ′, 3m + 2δ′ and 3m + 3δ′.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CalibrationProfile {
    pub version: u32,
    pub m: i64,
    pub m1: i64,
    pub m2: i64,
    pub d_bgi: i64,
    pub delta: i64,
    pub delta_prime: i64,
    pub k_path: f64,
    pub c_path: f64,
    pub b: f64,
    pub c: f64,
    pub fit: FitMetadata,
}

impl CalibrationProfile {
    /// Builds a profile from the empirical inputs, deriving the dependent
    /// constants.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        m1: i64,
        m2: i64,
        d_bgi: i64,
        delta: i64,
        k_path: f64,
        c_path: f64,
        b: f64,
        c: f64,
        fit: FitMetadata,
    ) -> CalibrationProfile {
        CalibrationProfile {
            version: 1,
            m: (m1 + 2).max(m2 + 3),
            m1,
            m2,
            d_bgi,
            delta,
            delta_prime: 4 * delta + 5,
            k_path,
            c_path,
            b,
            c,
            fit,
        }
    }

    pub fn validate(&self) -> Result<(), ProfileError> {
        let expected_dp = 4 * self.delta + 5;
        if self.delta_prime != expected_dp {
            return Err(ProfileError::DeltaPrimeMismatch {
                got: self.delta_prime,
                expected: expected_dp,
            });
        }
        let expected_m = (self.m1 + 2).max(self.m2 + 3);
        if self.m != expected_m {
            return Err(ProfileError::MMismatch {
                got: self.m,
                expected: expected_m,
            });
        }
        Ok(())
    }

    /// 6m + 4δ′: a domain is large when the endpoint projections differ by
    /// more than this.
    pub fn threshold_large(&self) -> i64 {
        6 * self.m + 4 * self.delta_prime
    }

    /// 3m + 2δ′: membership threshold for the L/R split of large domains.
    pub fn threshold_lr(&self) -> i64 {
        3 * self.m + 2 * self.delta_prime
    }

    /// 3m + 3δ′: vertex window used when assembling projection images.
    pub fn threshold_window(&self) -> i64 {
        3 * self.m + 3 * self.delta_prime
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }

    pub fn from_json(s: &str) -> Result<CalibrationProfile, String> {
        let p: CalibrationProfile = serde_json::from_str(s).map_err(|e| e.to_string())?;
        p.validate().map_err(|e| e.to_string())?;
        Ok(p)
    }
}

impl Default for CalibrationProfile {
    /// A conservative frozen profile; the lab's calibrate scan refits and
    /// writes a versioned replacement.
    fn default() -> CalibrationProfile {
        CalibrationProfile::new(
            4,
            4,
            4,
            2,
            2.0,
            8.0,
            0.25,
            24.0,
            FitMetadata {
                samples: 0,
                seed: 0,
                notes: "built-in conservative defaults".to_string(),
            },
        )
    }
}
