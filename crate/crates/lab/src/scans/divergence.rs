//! Divergence probe on the torus marking graph: shortest paths between
//! ρ⁻ⁿμ₀ and ρⁿμ₀ that avoid a ball around the midpoint μ₀, versus the
//! unobstructed distance.  Exploratory by design; the one hard assertion is
//! a superlinearity witness at the largest feasible radius.

use crate::config::ScanConfig;
use crate::report::ScanReport;
use crate::scans::cell;
use crate::scans::em_projection::{origin, surface1};
use crate::scans::orbit::rho;
use mcglab_core::farey::Slope;
use mcglab_core::markings::{marking_ball, Marking1};
use std::collections::{HashMap, HashSet, VecDeque};

pub const DEFAULT_RADIUS: u32 = 4;
pub const DEFAULT_WORD_LENGTH: u32 = 2;
pub const NODE_CAP: usize = 500_000;

pub const COLUMNS: [&str; 3] = ["r", "plain", "avoid"];

type Key = (Slope, Slope);

fn key(m: &Marking1) -> Key {
    (m.base().clone(), m.transversal().clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Search {
    Found(u64),
    Capped,
    Disconnected,
}

impl Search {
    fn cell(self) -> String {
        match self {
            Search::Found(d) => d.to_string(),
            Search::Capped => "cap".to_string(),
            Search::Disconnected => "unreachable".to_string(),
        }
    }
}

/// Bidirectional level-synchronized BFS in the elementary-move graph,
/// skipping `forbidden` vertices.  Exact when it reports Found.
pub fn bi_distance(a: &Marking1, b: &Marking1, forbidden: &HashSet<Key>, node_cap: usize) -> Search {
    if forbidden.contains(&key(a)) || forbidden.contains(&key(b)) {
        return Search::Disconnected;
    }
    if a == b {
        return Search::Found(0);
    }
    let mut da: HashMap<Key, u64> = HashMap::new();
    let mut db: HashMap<Key, u64> = HashMap::new();
    let mut fa: VecDeque<Marking1> = VecDeque::new();
    let mut fb: VecDeque<Marking1> = VecDeque::new();
    da.insert(key(a), 0);
    db.insert(key(b), 0);
    fa.push_back(a.clone());
    fb.push_back(b.clone());
    let (mut la, mut lb) = (0u64, 0u64);
    let mut best: Option<u64> = None;
    while !fa.is_empty() && !fb.is_empty() {
        if let Some(bst) = best {
            if la + lb + 1 >= bst {
                return Search::Found(bst);
            }
        }
        if da.len() + db.len() > node_cap {
            return Search::Capped;
        }
        // Expand the smaller frontier one full level.
        let from_a = fa.len() <= fb.len();
        let (frontier, own, own_level, other) = if from_a {
            (&mut fa, &mut da, &mut la, &db)
        } else {
            (&mut fb, &mut db, &mut lb, &da)
        };
        let mut next = VecDeque::new();
        while let Some(m) = frontier.pop_front() {
            for nb in m.elementary_moves() {
                let k = key(&nb);
                if forbidden.contains(&k) || own.contains_key(&k) {
                    continue;
                }
                own.insert(k.clone(), *own_level + 1);
                if let Some(&d2) = other.get(&k) {
                    let tot = *own_level + 1 + d2;
                    best = Some(best.map_or(tot, |b| b.min(tot)));
                }
                next.push_back(nb);
            }
        }
        *frontier = next;
        *own_level += 1;
    }
    match best {
        Some(d) => Search::Found(d),
        None => Search::Disconnected,
    }
}

pub fn run(cfg: &ScanConfig) -> ScanReport {
    let radius = cfg.radius.unwrap_or(DEFAULT_RADIUS);
    let n = cfg.word_length.unwrap_or(DEFAULT_WORD_LENGTH) as i64;
    let mu0 = origin(surface1(cfg.surface));
    let r = rho();
    let ga = r.pow(-n);
    let gb = r.pow(n);
    let a = Marking1::new(mu0.surface(), ga.apply(mu0.base()), ga.apply(mu0.transversal()))
        .expect("mapping classes preserve markings");
    let b = Marking1::new(mu0.surface(), gb.apply(mu0.base()), gb.apply(mu0.transversal()))
        .expect("mapping classes preserve markings");
    let plain = bi_distance(&a, &b, &HashSet::new(), NODE_CAP);
    let mut rows = Vec::new();
    if let Search::Found(plain_d) = plain {
        for rr in 0..=radius {
            let ball = marking_ball(&mu0, rr).expect("radius within cap");
            let forbidden: HashSet<Key> = ball.vertices().iter().map(key).collect();
            let avoid = if forbidden.contains(&key(&a)) || forbidden.contains(&key(&b)) {
                "endpoint_in_ball".to_string()
            } else {
                bi_distance(&a, &b, &forbidden, NODE_CAP).cell()
            };
            rows.push(vec![cell(rr), cell(plain_d), avoid]);
        }
    }
    let summary = summarize(&rows);
    let passed = summary["passed"].as_bool().unwrap();
    let failures = if passed {
        vec![]
    } else {
        vec![format!(
            "no superlinearity witness: avoid = {} at r = {} with plain = {}",
            summary["avoid_at_max_r"], summary["max_feasible_r"], summary["plain"]
        )]
    };
    ScanReport {
        columns: COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
        summary,
        passed,
        failures,
    }
}

pub fn summarize(rows: &[Vec<String>]) -> serde_json::Value {
    let plain: Option<u64> = rows.first().map(|r| r[1].parse().unwrap());
    let mut feasible: Vec<(u32, u64)> = Vec::new();
    for r in rows {
        let rr: u32 = r[0].parse().unwrap();
        if let Ok(av) = r[2].parse::<u64>() {
            feasible.push((rr, av));
        }
    }
    // Log-log least-squares exponent over r >= 1; exploratory.
    let pts: Vec<(f64, f64)> = feasible
        .iter()
        .filter(|&&(rr, _)| rr >= 1)
        .map(|&(rr, av)| ((rr as f64).ln(), (av as f64).ln()))
        .collect();
    let exponent = if pts.len() >= 2 {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let denom = n * sxx - sx * sx;
        if denom.abs() < 1e-12 {
            None
        } else {
            Some((n * sxy - sx * sy) / denom)
        }
    } else {
        None
    };
    let witness = feasible.iter().filter(|&&(rr, _)| rr >= 1).max_by_key(|&&(rr, _)| rr);
    let (passed, max_r, avoid_at_max) = match (plain, witness) {
        (Some(p), Some(&(rr, av))) => (av > 2 * p, Some(rr), Some(av)),
        // Nothing feasible to test: recorded, not failed.
        _ => (true, None, None),
    };
    serde_json::json!({
        "plain": plain,
        "max_feasible_r": max_r,
        "avoid_at_max_r": avoid_at_max,
        "exponent_fit": exponent,
        "insufficient": witness.is_none(),
        "passed": passed,
    })
}
