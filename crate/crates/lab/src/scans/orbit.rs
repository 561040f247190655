//! Pseudo-Anosov orbit scan: ρ = T_{1/0}·T_{0/1}⁻¹ applied to the origin
//! marking.  Supporting-annulus projections of ρⁿμ₀ against μ₀ must plateau
//! (the strong-boundedness signature) while the curve-graph displacement
//! grows linearly.

use crate::config::ScanConfig;
use crate::report::ScanReport;
use crate::scans::cell;
use crate::scans::em_projection::{origin, surface1};
use mcglab_core::farey::{farey_distance, MappingClass, Slope};
use mcglab_core::markings::{restrict_marking, support_annuli, Marking1};
use num_bigint::BigInt;
use num_traits::Signed;

pub const COLUMNS: [&str; 3] = ["n", "d_s", "sup_annuli"];

pub fn rho() -> MappingClass {
    MappingClass::twist(&Slope::infinity()).compose(&MappingClass::twist(&Slope::zero()).inverse())
}

fn orbit_marking(r: &MappingClass, n: i64, mu0: &Marking1) -> Marking1 {
    let g = r.pow(n);
    Marking1::new(
        mu0.surface(),
        g.apply(mu0.base()),
        g.apply(mu0.transversal()),
    )
    .expect("mapping classes preserve intersection numbers")
}

pub fn run(cfg: &ScanConfig) -> ScanReport {
    let n_max = cfg.samples.max(2) as i64;
    let mu0 = origin(surface1(cfg.surface));
    let r = rho();
    {
        let m = r.matrix();
        debug_assert_eq!(&m[0] + &m[3], BigInt::from(3), "trace-3 hyperbolic");
    }
    let markings: Vec<Marking1> = (0..=n_max).map(|n| orbit_marking(&r, n, &mu0)).collect();
    let annuli = support_annuli(&markings);
    // coordinate tables: annulus -> per-n twist coordinate
    let tables: Vec<Vec<BigInt>> = annuli
        .iter()
        .map(|a| {
            markings
                .iter()
                .map(|m| restrict_marking(m, a).expect("orbit slopes restrict"))
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for n in 0..=n_max as usize {
        let d_s = farey_distance(mu0.base(), markings[n].base()).0;
        let sup = tables
            .iter()
            .map(|t| (&t[n] - &t[0]).abs())
            .max()
            .unwrap_or_else(|| BigInt::from(0));
        rows.push(vec![cell(n), cell(d_s), cell(sup)]);
    }
    let summary = summarize(&rows);
    let mut failures = Vec::new();
    if summary["plateau"] != serde_json::json!(true) {
        failures.push(format!(
            "annular sup still growing: {} at n <= {} vs {} at n <= {}",
            summary["sup_half"],
            n_max / 2,
            summary["sup_full"],
            n_max
        ));
    }
    if summary["linear_growth"] != serde_json::json!(true) {
        failures.push("curve-graph displacement fell below 0.2·n".to_string());
    }
    let passed = failures.is_empty();
    ScanReport {
        columns: COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
        summary,
        passed,
        failures,
    }
}

pub fn summarize(rows: &[Vec<String>]) -> serde_json::Value {
    let n_max = rows.len().saturating_sub(1);
    let mut sup_half = BigInt::from(0);
    let mut sup_full = BigInt::from(0);
    let mut linear = true;
    let mut translation_fit = f64::INFINITY;
    for r in rows {
        let n: usize = r[0].parse().unwrap();
        let d_s: u64 = r[1].parse().unwrap();
        let sup: BigInt = r[2].parse().unwrap();
        if n <= n_max / 2 {
            sup_half = sup_half.clone().max(sup.clone());
        }
        sup_full = sup_full.clone().max(sup);
        if n >= 10 {
            // d_s ≥ 0.2·n, in integers: 5·d_s ≥ n.
            if 5 * d_s < n as u64 {
                linear = false;
            }
            translation_fit = translation_fit.min(d_s as f64 / n as f64);
        }
    }
    if !translation_fit.is_finite() {
        translation_fit = 0.0;
    }
    serde_json::json!({
        "n_max": n_max,
        "sup_half": sup_half.to_string(),
        "sup_full": sup_full.to_string(),
        "plateau": sup_half == sup_full,
        "linear_growth": linear,
        "translation_length_lower": translation_fit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{ScanKind, SurfaceKind};

    #[test]
    fn rho_is_trace_three() {
        let r = rho();
        let m = r.matrix();
        assert_eq!(&m[0] + &m[3], BigInt::from(3));
    }

    #[test]
    fn short_orbit_has_zero_start_and_recomputable_summary() {
        let cfg = ScanConfig {
            scan: ScanKind::Orbit,
            surface: SurfaceKind::S11,
            seed: 0,
            samples: 12,
            radius: None,
            threshold: None,
            word_length: None,
            window: None,
            out: "/tmp/o.csv".into(),
        };
        let r = run(&cfg);
        assert_eq!(r.rows[0], vec!["0", "0", "0"]);
        assert_eq!(r.summary, summarize(&r.rows));
    }
}
