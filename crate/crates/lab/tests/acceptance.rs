//! End-to-end acceptance gate: every criterion prints one pass/fail line.
//! Oracles are implemented here independently of the library code they
//! check.

use mcglab::config::{ScanConfig, ScanKind, SurfaceKind};
use mcglab::rng::{random_marking, random_slope, sample_rng};
use mcglab::s05::random_disjoint_pair;
use mcglab_core::curves05::{
    base_curve, projection_diameter, side_subsurface, subsurface_project, Projection05,
    BASE_COUNT,
};
use mcglab_core::farey::{farey_distance, MappingClass, Slope, TwistChart};
use mcglab_core::hierarchy::{
    build_hierarchy, large_domain_report, large_links_violations, resolve_path,
};
use mcglab_core::markings::{support_annuli, Surface1};
use mcglab_core::profile::CalibrationProfile;
use num_bigint::BigInt;
use rand::Rng;
use std::time::Instant;

/// Plain-integer BFS oracle for Farey distances, independent of the pivot
/// recursion under test.  Adjacency of r/s to p/q is the unimodular
/// condition |p·s − q·r| = 1, enumerated as (r, s) = (r0 + n·p, s0 + n·q).
mod oracle {
    use super::Slope;
    use num_traits::ToPrimitive;
    use std::collections::{HashMap, VecDeque};

    fn norm(r: i64, s: i64) -> (i64, i64) {
        if s < 0 || (s == 0 && r < 0) {
            (-r, -s)
        } else {
            (r, s)
        }
    }

    fn egcd(p: i64, q: i64) -> (i64, i64) {
        if q == 0 {
            (p.signum(), 0)
        } else {
            let (x, y) = egcd(q, p.rem_euclid(q));
            (y, x - p.div_euclid(q) * y)
        }
    }

    fn neighbors(p: i64, q: i64, cap: i64, out: &mut Vec<(i64, i64)>) {
        out.clear();
        if q == 0 {
            for n in -cap..=cap {
                out.push(norm(n, 1));
            }
            return;
        }
        let (x, _) = egcd(p, q);
        let mut s0 = x.rem_euclid(q);
        if s0 == 0 {
            s0 = q;
        }
        let r0 = (p * s0 - 1) / q;
        let mut lo = (-cap - s0).div_euclid(q);
        let mut hi = (cap - s0).div_euclid(q);
        if p > 0 {
            lo = lo.max((-cap - r0).div_euclid(p) - 1);
            hi = hi.min((cap - r0).div_euclid(p) + 1);
        } else if p < 0 {
            lo = lo.max((cap - r0).div_euclid(p) - 1);
            hi = hi.min((-cap - r0).div_euclid(p) + 1);
        }
        for n in lo..=hi {
            let (r, s) = (r0 + n * p, s0 + n * q);
            if r.abs() <= cap && s.abs() <= cap {
                out.push(norm(r, s));
            }
        }
    }

    fn key(s: &Slope) -> (i64, i64) {
        norm(
            s.numer().to_i64().expect("oracle slope fits i64"),
            s.denom().to_i64().expect("oracle slope fits i64"),
        )
    }

    /// Multi-target BFS from `a`, pruned to |p|, |q| <= cap.
    pub fn distances(a: &Slope, targets: &[Slope], cap: i64) -> HashMap<(i64, i64), u64> {
        let start = key(a);
        let mut wanted: std::collections::HashSet<(i64, i64)> =
            targets.iter().map(key).collect();
        let mut found = HashMap::new();
        if wanted.remove(&start) {
            found.insert(start, 0);
        }
        let mut dist: HashMap<(i64, i64), u64> = HashMap::new();
        dist.insert(start, 0);
        let mut queue = VecDeque::new();
        queue.push_back(start);
        let mut buf = Vec::new();
        while let Some((p, q)) = queue.pop_front() {
            if wanted.is_empty() {
                break;
            }
            let d = dist[&(p, q)];
            neighbors(p, q, cap, &mut buf);
            for &nb in buf.iter() {
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(nb) {
                    e.insert(d + 1);
                    queue.push_back(nb);
                    if wanted.remove(&nb) {
                        found.insert(nb, d + 1);
                    }
                }
            }
        }
        found
    }

    pub fn slope_key(s: &Slope) -> (i64, i64) {
        key(s)
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn cfg(scan: ScanKind, surface: SurfaceKind, seed: u64, samples: u64) -> ScanConfig {
    ScanConfig {
        scan,
        surface,
        seed,
        samples,
        radius: None,
        threshold: None,
        word_length: None,
        window: None,
        out: std::path::PathBuf::new(),
    }
}

// 1. farey_distance against the independent bounded-BFS oracle on sampled
// slope pairs with |p|, |q| <= 30.
fn c01_farey_oracle() -> Outcome {
    let mut pool = Vec::new();
    for p in -30i64..=30 {
        for q in 0i64..=30 {
            if (q > 0 || p > 0) && num_integer::gcd(p, q) == 1 {
                pool.push(Slope::new(p, q).unwrap());
            }
        }
    }
    let mut rng = sample_rng(101, 0);
    let mut checked = 0u64;
    for _ in 0..100 {
        let src = pool[rng.gen_range(0..pool.len())].clone();
        let targets: Vec<Slope> = (0..30)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        let oracle_d = oracle::distances(&src, &targets, 1000);
        for t in &targets {
            let got = farey_distance(&src, t).0;
            match oracle_d.get(&oracle::slope_key(t)) {
                Some(&want) if want == got => checked += 1,
                Some(&want) => {
                    return fail(format!("d({src}, {t}) = {got}, oracle says {want}"));
                }
                None => return fail(format!("oracle never reached {t} from {src}")),
            }
        }
    }
    ok(format!("{checked} pairs agree"))
}

// 2. Twist coordinates are exactly additive under powers of the twist.
fn c02_twist_exactness() -> Outcome {
    let mut rng = sample_rng(102, 0);
    for i in 0..100_000u64 {
        let da = rng.gen_range(0..=5);
        let db = rng.gen_range(0..=5);
        let alpha = random_slope(&mut rng, da);
        let beta = random_slope(&mut rng, db);
        if alpha == beta {
            continue;
        }
        let n: i64 = rng.gen_range(-30..=30);
        let chart = TwistChart::new(&alpha);
        let t0 = chart.twist_coordinate(&beta).expect("beta crosses alpha");
        let image = MappingClass::twist(&alpha).pow(n).apply(&beta);
        let t1 = chart.twist_coordinate(&image).expect("image crosses alpha");
        let want = t0 + BigInt::from(n);
        if t1 != want {
            return fail(format!(
                "sample {i}: t(T^{n} {beta}) = {t1} but t({beta}) + n = {want}"
            ));
        }
    }
    ok("100000 triples exact")
}

// 3. Projections of disjoint pairs have diameter at most 3.
fn c03_lipschitz_projection() -> Outcome {
    let mut worst = 0u64;
    for i in 0..10_000u64 {
        let mut rng = sample_rng(103, i);
        let wl = rng.gen_range(0..=8);
        let (pair, _) = random_disjoint_pair(&mut rng, wl, 128);
        let y = side_subsurface(&base_curve(rng.gen_range(0..BASE_COUNT)));
        let mut sets: Vec<Projection05> = Vec::new();
        for c in &pair {
            if let Ok(p) = subsurface_project(&y, c) {
                if !p.is_empty() {
                    sets.push(p);
                }
            }
        }
        if sets.is_empty() {
            continue;
        }
        let refs: Vec<&Projection05> = sets.iter().collect();
        let d = projection_diameter(&refs);
        worst = worst.max(d);
        if d > 3 {
            return fail(format!("sample {i}: disjoint pair projects to diameter {d}"));
        }
    }
    ok(format!("10000 samples, max diameter {worst}"))
}

// 4. One elementary move shifts any projection by at most 4, exhaustively
// over radius-4 balls on both surfaces.
fn c04_elementary_move_projection() -> Outcome {
    for surface in [Surface1::TorusOnePuncture, Surface1::SphereFourPunctures] {
        let audit = mcglab::scans::em_projection::audit(surface, 4);
        if !audit.failures.is_empty() {
            return fail(format!(
                "{:?}: {} violations, first: {}",
                surface,
                audit.failures.len(),
                audit.failures[0]
            ));
        }
        if audit.max_d > BigInt::from(4) {
            return fail(format!("{:?}: max move shift {}", surface, audit.max_d));
        }
    }
    ok("both radius-4 balls within the bound")
}

// 5. Behrstock plateau: the empirical min-projection constant is identical
// at word lengths 12 and 24.
fn c05_behrstock_plateau() -> Outcome {
    let c = cfg(ScanKind::Behrstock, SurfaceKind::S05, 105, 10_000);
    let r = mcglab::run_scan(&c, &CalibrationProfile::default());
    if r.summary["insufficient"] == serde_json::json!(true) {
        return fail("no usable samples".to_string());
    }
    if r.passed {
        ok(format!(
            "M_emp = {} at both lengths over {} + {} rows",
            r.summary["m_emp_l"], r.summary["rows_l"], r.summary["rows_2l"]
        ))
    } else {
        fail(r.failures.join("; "))
    }
}

// 6. Distance-formula fit on a radius-6 ball, stable across two seeds.
fn c06_distance_formula_fit() -> Outcome {
    let c = cfg(ScanKind::DistanceFormula, SurfaceKind::S11, 106, 1);
    let r = mcglab::run_scan(&c, &CalibrationProfile::default());
    if r.passed {
        ok(format!(
            "(K, C) = ({}, {}) and ({}, {})",
            r.summary["k_0"], r.summary["c_0"], r.summary["k_1"], r.summary["c_1"]
        ))
    } else {
        fail(r.failures.join("; "))
    }
}

// 7. Hierarchy structural suite over random endpoint pairs.
fn c07_hierarchy_suite() -> Outcome {
    let profile = CalibrationProfile::default();
    for i in 0..1000u64 {
        let mut rng = sample_rng(107, i);
        let d_i = rng.gen_range(0..=4);
        let d_t = rng.gen_range(2..=7);
        let mu_i = random_marking(Surface1::TorusOnePuncture, &mut rng, d_i);
        let mu_t = random_marking(Surface1::TorusOnePuncture, &mut rng, d_t);
        let h = build_hierarchy(&mu_i, &mu_t);
        let path = resolve_path(&h);
        if !path.is_valid() {
            return fail(format!("sample {i}: resolved path is not a move sequence"));
        }
        if path.markings()[0] != mu_i || path.markings()[path.len() - 1] != mu_t {
            return fail(format!("sample {i}: resolved path misses an endpoint"));
        }
        let mut all = vec![mu_i.clone(), mu_t.clone()];
        all.extend_from_slice(path.markings());
        let annuli = support_annuli(&all);
        let viol = large_links_violations(&h, &annuli, profile.m2);
        if !viol.is_empty() {
            return fail(format!(
                "sample {i}: large-link annuli missing from the main geodesic: {viol:?}"
            ));
        }
        let d_p = rng.gen_range(0..=4);
        let probe = random_marking(Surface1::TorusOnePuncture, &mut rng, d_p);
        let rep = large_domain_report(&h, &probe, &profile);
        if rep.l.iter().any(|d| rep.r.contains(d)) {
            return fail(format!("sample {i}: a domain is in both L and R"));
        }
        let unclassified = rep
            .g
            .iter()
            .filter(|(d, _)| !rep.l.contains(d) && !rep.r.contains(d))
            .count();
        if unclassified > 1 {
            return fail(format!(
                "sample {i}: {unclassified} large domains escape the L/R split"
            ));
        }
    }
    ok("1000 hierarchies clean")
}

// 8. Contraction constant agrees between near and far probe radii.
fn c08_contraction_stability() -> Outcome {
    let c = cfg(ScanKind::Contraction, SurfaceKind::S11, 108, 800);
    let r = mcglab::run_scan(&c, &CalibrationProfile::default());
    if r.passed {
        ok(format!(
            "c = {} on r in [4,8] vs {} on r in [8,12] ({} qualifying probes)",
            r.summary["c_lo"], r.summary["c_hi"], r.summary["included"]
        ))
    } else {
        fail(r.failures.join("; "))
    }
}

// 9. Strong boundedness of the trace-3 orbit with linear curve-graph growth.
fn c09_strong_boundedness() -> Outcome {
    let c = cfg(ScanKind::Orbit, SurfaceKind::S11, 109, 100);
    let r = mcglab::run_scan(&c, &CalibrationProfile::default());
    if r.passed {
        ok(format!(
            "annular sup {} at N = 50 and N = 100, translation length >= {}",
            r.summary["sup_full"], r.summary["translation_length_lower"]
        ))
    } else {
        fail(r.failures.join("; "))
    }
}

// 10. Byte-identical CSV output under 1, 4, and 16 workers.
fn c10_determinism() -> Outcome {
    let c = cfg(ScanKind::Behrstock, SurfaceKind::S05, 110, 200);
    let profile = CalibrationProfile::default();
    let mut outputs = Vec::new();
    for workers in [1usize, 4, 16] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool");
        let bytes = pool.install(|| mcglab::run_scan(&c, &profile).csv_bytes());
        outputs.push((workers, bytes));
    }
    for w in outputs.windows(2) {
        if w[0].1 != w[1].1 {
            return fail(format!(
                "CSV differs between {} and {} workers",
                w[0].0, w[1].0
            ));
        }
    }
    ok(format!("{} identical bytes across 1/4/16 workers", outputs[0].1.len()))
}

#[test]
fn acceptance() {
    let checks: [(&str, fn() -> Outcome); 10] = [
        ("01 farey-oracle-equivalence", c01_farey_oracle),
        ("02 twist-exactness", c02_twist_exactness),
        ("03 lipschitz-projection", c03_lipschitz_projection),
        ("04 elementary-move-projection", c04_elementary_move_projection),
        ("05 behrstock-plateau", c05_behrstock_plateau),
        ("06 distance-formula-fit", c06_distance_formula_fit),
        ("07 hierarchy-structural-suite", c07_hierarchy_suite),
        ("08 contraction-stability", c08_contraction_stability),
        ("09 strong-boundedness", c09_strong_boundedness),
        ("10 determinism", c10_determinism),
    ];
    let mut all = true;
    for (name, f) in checks {
        let start = Instant::now();
        let o = f();
        let verdict = if o.pass { "pass" } else { "FAIL" };
        println!(
            "criterion {name}: {verdict} ({:.1}s) — {}",
            start.elapsed().as_secs_f64(),
            o.detail
        );
        all &= o.pass;
    }
    assert!(all, "at least one acceptance criterion failed");
}
