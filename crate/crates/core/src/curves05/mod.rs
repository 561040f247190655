//! Exact curve engine for the five-punctured sphere: isotopy classes in
//! normal coordinates over a fixed ideal triangulation, geometric
//! intersection numbers, Dehn-twist actions by word splicing, the
//! four-holed-sphere side of each curve, and subsurface projection by arc
//! surgery.

mod arrange;
mod tri;

use crate::farey::{farey_distance, Slope};
use arrange::{Arrangement, Regions};
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;
pub use tri::{EDGES, FACES, PUNCTURES};

pub const PUNCTURE_NAMES: [&str; PUNCTURES] = ["N", "S", "A", "B", "C"];

/// The ten unordered puncture pairs; twist words are spelled in these.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Seed curves: two disjoint pants curves and three filling companions,
/// indexed into PAIRS.
pub const SEED_PAIRS: [usize; 5] = [7, 3, 1, 5, 6];

pub fn pair_index(x: usize, y: usize) -> usize {
    let key = (x.min(y), x.max(y));
    PAIRS
        .iter()
        .position(|&p| p == key)
        .expect("distinct punctures")
}

/// Base curves for twist words: the ten pair curves plus two extra route
/// variants of the polar pair {N, S}, whose curve is not round (the poles
/// bound no edge, so the separating curve must tube through one equatorial
/// gap). Index 0 tubes through BC; indices 10 and 11 through AB and CA.
pub const BASE_COUNT: usize = 12;

fn base_vector(i: usize) -> [u64; EDGES] {
    match i {
        0 => tri::ns_vector(7),
        1..=9 => {
            let (x, y) = PAIRS[i];
            tri::pair_vector(x, y)
        }
        10 => tri::ns_vector(6),
        11 => tri::ns_vector(8),
        _ => panic!("base index out of range"),
    }
}

/// The puncture pair a base curve cuts off.
fn base_pair(i: usize) -> (usize, usize) {
    if i < PAIRS.len() {
        PAIRS[i]
    } else {
        (0, 1)
    }
}

pub fn base_curve(i: usize) -> NormalCurve {
    NormalCurve {
        weights: base_vector(i),
        word: Some(Word {
            base: i,
            twists: Vec::new(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("all-zero weight vector")]
    Empty,
    #[error("weights violate the matching conditions")]
    MatchingViolation,
    #[error("weights describe a multicurve")]
    NotConnected,
    #[error("weights describe a puncture-parallel curve")]
    Peripheral,
    #[error("curve is not contained in the subsurface")]
    NotInSubsurface,
    #[error("no chart transport available: boundary has no word provenance")]
    ChartUnavailable,
    #[error("projection of the {which} curve misses the subsurface")]
    EmptyProjection { which: &'static str },
}

/// A twist-word recipe: the curve is the result of applying `twists` in
/// sequence to the round curve PAIRS[base].
#[derive(Debug, Clone)]
pub struct Word {
    pub base: usize,
    pub twists: Vec<(usize, i64)>,
}

/// An essential simple closed curve in normal coordinates. Equality and
/// hashing use the weights only; the weights are canonical for the fixed
/// triangulation.
#[derive(Debug, Clone)]
pub struct NormalCurve {
    weights: [u64; EDGES],
    word: Option<Word>,
}

impl PartialEq for NormalCurve {
    fn eq(&self, other: &NormalCurve) -> bool {
        self.weights == other.weights
    }
}
impl Eq for NormalCurve {}
impl std::hash::Hash for NormalCurve {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.weights.hash(state);
    }
}

impl NormalCurve {
    pub fn weights(&self) -> &[u64; EDGES] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn word(&self) -> Option<&Word> {
        self.word.as_ref()
    }

    /// The base-curve index these weights match, if any.
    pub fn as_base(&self) -> Option<usize> {
        (0..BASE_COUNT).find(|&i| base_vector(i) == self.weights)
    }

    /// The puncture pair this curve cuts off, when it is one of the canonical
    /// pair curves.
    pub fn as_pair(&self) -> Option<(usize, usize)> {
        (0..PAIRS.len())
            .find(|&i| base_vector(i) == self.weights)
            .map(|i| PAIRS[i])
    }
}

/// The canonical curve separating punctures {x, y} from the other three.
pub fn pair_curve(x: usize, y: usize) -> NormalCurve {
    base_curve(pair_index(x, y))
}

pub fn seed(i: usize) -> NormalCurve {
    let (x, y) = PAIRS[SEED_PAIRS[i]];
    pair_curve(x, y)
}

pub fn seeds() -> Vec<NormalCurve> {
    (0..SEED_PAIRS.len()).map(seed).collect()
}

pub fn curve_from_weights(w: &[u64; EDGES]) -> Result<NormalCurve, CurveError> {
    if w.iter().all(|&x| x == 0) {
        return Err(CurveError::Empty);
    }
    if !tri::matching_ok(w) {
        return Err(CurveError::MatchingViolation);
    }
    if (0..PUNCTURES).any(|v| tri::link_vector(v) == *w) {
        return Err(CurveError::Peripheral);
    }
    let orbit = tri::trace_orbit(w);
    if (orbit.len() as u64) != w.iter().sum::<u64>() {
        return Err(CurveError::NotConnected);
    }
    let mut curve = NormalCurve {
        weights: *w,
        word: None,
    };
    if let Some(i) = curve.as_base() {
        curve.word = Some(Word {
            base: i,
            twists: Vec::new(),
        });
    }
    Ok(curve)
}

fn curve_from_word(word: &[usize]) -> Result<NormalCurve, CurveError> {
    let reduced = tri::reduce_cyclic_word(word);
    if reduced.is_empty() {
        return Err(CurveError::Empty);
    }
    curve_from_weights(&tri::word_weights(&reduced))
}

/// Geometric intersection number of the isotopy classes.
pub fn intersection_number(a: &NormalCurve, b: &NormalCurve) -> u64 {
    if a == b {
        return 0;
    }
    let mut arr = Arrangement::from_curves(&a.weights, &b.weights);
    arr.minimize().list.len() as u64
}

fn inverse_twists(twists: &[(usize, i64)]) -> Vec<(usize, i64)> {
    twists.iter().rev().map(|&(p, n)| (p, -n)).collect()
}

/// T_axis^n applied to `target`, by splicing the axis word into the target at
/// every crossing of a minimal configuration. The splice direction at each
/// crossing follows the crossing side in the coherent surface orientation, so
/// the action is a single handedness of twist for every axis.
fn twist_about(axis: &NormalCurve, n: i64, target: &NormalCurve) -> NormalCurve {
    if n == 0 || axis == target {
        return target.clone();
    }
    let mut arr = Arrangement::from_curves(&target.weights, &axis.weights);
    let cs = arr.minimize();
    if cs.list.is_empty() {
        return target.clone();
    }
    let bpath: Vec<usize> = arr.path(1).to_vec();
    let m = bpath.len();
    let mut word: Vec<usize> = Vec::new();
    let mut cursor = 0usize;
    let apath_len = arr.path(0).len();
    for l in 0..apath_len {
        word.push(arr.point_edge(arr.path(0)[l]));
        while cursor < cs.along_a.len() && cs.list[cs.along_a[cursor]].a_link == l {
            let c = cs.list[cs.along_a[cursor]];
            cursor += 1;
            let forward = c.a_exit_plus == (n > 0);
            let j = c.b_link;
            for _ in 0..n.unsigned_abs() {
                if forward {
                    for i in 1..=m {
                        word.push(arr.point_edge(bpath[(j + i) % m]));
                    }
                } else {
                    for i in 0..m {
                        word.push(arr.point_edge(bpath[(j + m - i) % m]));
                    }
                }
            }
        }
    }
    debug_assert_eq!(cursor, cs.along_a.len());
    let mut out = curve_from_word(&word).expect("twist image is essential");
    out.word = match (&target.word, &axis.word) {
        (Some(tw), Some(aw)) => {
            let mut twists = tw.twists.clone();
            twists.extend(inverse_twists(&aw.twists));
            twists.push((aw.base, n));
            twists.extend(aw.twists.iter().copied());
            Some(Word {
                base: tw.base,
                twists,
            })
        }
        _ => out.word,
    };
    out
}

/// Applies a twist word: entries (base curve index, power) act in sequence,
/// first entry first.
pub fn apply_twist_word(word: &[(usize, i64)], a: &NormalCurve) -> NormalCurve {
    let mut cur = a.clone();
    for &(p, n) in word {
        assert!(p < BASE_COUNT, "twist symbol out of range");
        cur = twist_about(&base_curve(p), n, &cur);
    }
    cur
}

/// The four-holed-sphere side of a curve: the three punctures it does not cut
/// off, plus the curve as boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsurfaceS05 {
    boundary: NormalCurve,
    punctures: [usize; 3],
}

impl SubsurfaceS05 {
    pub fn boundary(&self) -> &NormalCurve {
        &self.boundary
    }

    pub fn punctures(&self) -> [usize; 3] {
        self.punctures
    }
}

pub fn side_subsurface(gamma: &NormalCurve) -> SubsurfaceS05 {
    let arr = Arrangement::from_curves(&gamma.weights, &gamma.weights);
    let regions = Regions::new(&arr);
    let mut by_region: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for v in 0..PUNCTURES {
        by_region
            .entry(regions.puncture_region[v])
            .or_default()
            .push(v);
    }
    let three: Vec<usize> = by_region
        .values()
        .find(|side| side.len() == 3)
        .expect("a curve splits the punctures 2|3")
        .clone();
    SubsurfaceS05 {
        boundary: gamma.clone(),
        punctures: [three[0], three[1], three[2]],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    Same,
    Disjoint,
    Nested,
    Overlap,
}

pub fn classify_pair(y: &SubsurfaceS05, z: &SubsurfaceS05) -> PairClass {
    if y.boundary == z.boundary {
        return PairClass::Same;
    }
    if intersection_number(&y.boundary, &z.boundary) > 0 {
        return PairClass::Overlap;
    }
    // Two-punctured sides; strict containment would mean nesting, but distinct
    // disjoint curves on S_{0,5} never cut off nested pairs.
    let two = |s: &SubsurfaceS05| -> Vec<usize> {
        (0..PUNCTURES).filter(|v| !s.punctures.contains(v)).collect()
    };
    let (ty, tz) = (two(y), two(z));
    if ty.iter().all(|v| tz.contains(v)) || tz.iter().all(|v| ty.contains(v)) {
        return PairClass::Nested;
    }
    PairClass::Disjoint
}

/// A Farey chart on the curve complex of a four-holed-sphere side: three
/// reference curves in the subsurface playing 1/0, 0/1 and 1/1.
#[derive(Debug, Clone)]
pub struct FareyChart05 {
    boundary: NormalCurve,
    refs: [NormalCurve; 3],
}

impl FareyChart05 {
    pub fn boundary(&self) -> &NormalCurve {
        &self.boundary
    }

    pub fn references(&self) -> &[NormalCurve; 3] {
        &self.refs
    }
}

fn canonical_refs(boundary_base: usize) -> [NormalCurve; 3] {
    let boundary = base_curve(boundary_base);
    let (x, y) = base_pair(boundary_base);
    if (x, y) == (0, 1) {
        // A polar boundary: its tube route blocks one equatorial pair (they
        // meet in four points), so take the other two and twist one about the
        // other for the third reference.
        // The third reference is the other curve class cutting off the
        // blocked pair: the boundary of a neighborhood of an arc joining its
        // punctures through the northern corridor, around the tube.
        let (g1, g2, w11) = match boundary_base {
            0 => ((2, 3), (2, 4), [2, 1, 1, 0, 1, 1, 1, 2, 1]),
            10 => ((3, 4), (2, 4), [1, 1, 2, 1, 1, 0, 2, 1, 1]),
            11 => ((2, 3), (3, 4), [1, 2, 1, 1, 0, 1, 1, 1, 2]),
            _ => unreachable!(),
        };
        let r10 = pair_curve(g1.0, g1.1);
        let r01 = pair_curve(g2.0, g2.1);
        let r11 = curve_from_weights(&w11).expect("corridor curve is normal");
        for r in [&r10, &r01, &r11] {
            assert_eq!(intersection_number(r, &boundary), 0);
        }
        assert_eq!(intersection_number(&r10, &r11), 2);
        assert_eq!(intersection_number(&r01, &r11), 2);
        return [r10, r01, r11];
    }
    let side: Vec<usize> = (0..PUNCTURES).filter(|&v| v != x && v != y).collect();
    let (u, v, w) = (side[0], side[1], side[2]);
    // Each reference slot has one canonical candidate, except a {N, S} slot
    // whose route through the equator is chosen to fit the boundary.
    let slot = |a: usize, b: usize| -> Vec<NormalCurve> {
        if (a.min(b), a.max(b)) == (0, 1) {
            vec![base_curve(0), base_curve(10), base_curve(11)]
        } else {
            vec![pair_curve(a, b)]
        }
    };
    let (c10, c01, c11) = (slot(u, v), slot(v, w), slot(u, w));
    for r10 in &c10 {
        for r01 in &c01 {
            for r11 in &c11 {
                let refs = [r10, r01, r11];
                let ok = refs.iter().all(|r| intersection_number(r, &boundary) == 0)
                    && intersection_number(r10, r01) == 2
                    && intersection_number(r10, r11) == 2
                    && intersection_number(r01, r11) == 2;
                if ok {
                    return [r10.clone(), r01.clone(), r11.clone()];
                }
            }
        }
    }
    panic!("no canonical reference triple for base {boundary_base}");
}

/// Chart for the side of a boundary curve: canonical for base curves,
/// transported by the word recipe otherwise.
pub fn chart_for(y: &SubsurfaceS05) -> Result<FareyChart05, CurveError> {
    let refs = if let Some(i) = y.boundary.as_base() {
        canonical_refs(i)
    } else if let Some(word) = &y.boundary.word {
        let base = canonical_refs(word.base);
        [
            apply_twist_word(&word.twists, &base[0]),
            apply_twist_word(&word.twists, &base[1]),
            apply_twist_word(&word.twists, &base[2]),
        ]
    } else {
        return Err(CurveError::ChartUnavailable);
    };
    debug_assert!(refs
        .iter()
        .all(|r| intersection_number(r, &y.boundary) == 0));
    debug_assert_eq!(intersection_number(&refs[0], &refs[1]), 2);
    debug_assert_eq!(intersection_number(&refs[0], &refs[2]), 2);
    debug_assert_eq!(intersection_number(&refs[1], &refs[2]), 2);
    Ok(FareyChart05 {
        boundary: y.boundary.clone(),
        refs,
    })
}

/// Slope of a curve contained in the chart's subsurface: denominators and
/// numerators from halved intersection numbers with the references, the sign
/// resolved against the 1/1 reference.
pub fn chart_slope(chart: &FareyChart05, c: &NormalCurve) -> Result<Slope, CurveError> {
    if c == &chart.boundary || intersection_number(c, &chart.boundary) != 0 {
        return Err(CurveError::NotInSubsurface);
    }
    let halves = |r: &NormalCurve| -> u64 {
        let i = intersection_number(c, r);
        assert!(i % 2 == 0, "intersections inside a sphere side are even");
        i / 2
    };
    let q = halves(&chart.refs[0]);
    let pa = halves(&chart.refs[1]);
    let h = halves(&chart.refs[2]);
    if q == 0 {
        return Ok(Slope::infinity());
    }
    if pa == 0 {
        return Ok(Slope::zero());
    }
    let p: i64 = if pa.abs_diff(q) == h {
        pa as i64
    } else {
        assert_eq!(pa + q, h, "inconsistent chart intersection triple");
        -(pa as i64)
    };
    Ok(Slope::new(p, q as i64).expect("nonzero pair"))
}

fn round_div(a: i64, b: i64) -> i64 {
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    let d = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if 2 * r >= b {
        d + 1
    } else {
        d
    }
}

/// Inverse of chart_slope: builds a curve of the given slope by unwinding the
/// slope through twists about the chart references. The handedness of each
/// reference twist on slopes is measured, not assumed.
pub fn slope_to_curve(chart: &FareyChart05, s: &Slope) -> NormalCurve {
    // Measured twist handedness: T_{e10} on slopes is p -> p + 2*s10*q, and
    // T_{e01} is q -> q + 2*s01*p.
    let t10 = chart_slope(chart, &twist_about(&chart.refs[0], 1, &chart.refs[1]))
        .expect("twist image stays in the subsurface");
    let s10: i64 = if t10.numer().is_positive() { 1 } else { -1 };
    let t01 = chart_slope(chart, &twist_about(&chart.refs[1], 1, &chart.refs[0]))
        .expect("twist image stays in the subsurface");
    let s01: i64 = if t01.numer().is_positive() { 1 } else { -1 };
    debug_assert_eq!(t10.numer().abs(), num_bigint::BigInt::from(2));
    debug_assert_eq!(t01.denom().abs(), num_bigint::BigInt::from(2));

    let mut p = s.numer().to_i64().expect("slope numerator fits i64");
    let mut q = s.denom().to_i64().expect("slope denominator fits i64");
    // Applied slope maps, innermost first; unwound below.
    let mut ops: Vec<(usize, i64)> = Vec::new();
    let base = loop {
        match (p, q) {
            (1, 0) | (-1, 0) => break 0,
            (0, 1) => break 1,
            (1, 1) => break 2,
            _ => {}
        }
        if p == -q {
            // (-1, 1): one reference twist lands on (1, 1).
            p += 2 * q;
            ops.push((0, s10));
        } else if p.abs() > q.abs() {
            let n = round_div(p, 2 * q);
            p -= 2 * n * q;
            ops.push((0, -n * s10));
        } else {
            let n = round_div(q, 2 * p);
            q -= 2 * n * p;
            ops.push((1, -n * s01));
            if q < 0 {
                p = -p;
                q = -q;
            }
        }
    };
    let mut cur = chart.refs[base].clone();
    for &(r, m) in ops.iter().rev() {
        cur = twist_about(&chart.refs[r], -m, &cur);
    }
    let got = chart_slope(chart, &cur).expect("constructed curve lies in the subsurface");
    assert_eq!(&got, s, "slope synthesis must round-trip");
    cur
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection05 {
    Empty,
    Slopes(Vec<Slope>),
}

impl Projection05 {
    pub fn slopes(&self) -> &[Slope] {
        match self {
            Projection05::Empty => &[],
            Projection05::Slopes(s) => s,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Projection05::Empty)
    }
}

fn sort_slopes(slopes: &mut Vec<Slope>) {
    slopes.sort_by(|a, b| {
        (a.denom(), a.numer())
            .cmp(&(b.denom(), b.numer()))
    });
    slopes.dedup();
}

/// Subsurface projection: empty if the curve misses the side, the curve's own
/// slope if it is contained, otherwise arc surgery along every arc on the
/// four-holed side, keeping the full set of essential surgered slopes.
pub fn subsurface_project(
    y: &SubsurfaceS05,
    beta: &NormalCurve,
) -> Result<Projection05, CurveError> {
    let gamma = &y.boundary;
    if beta == gamma {
        return Ok(Projection05::Empty);
    }
    let mut arr = Arrangement::from_curves(&beta.weights, &gamma.weights);
    let cs = arr.minimize();
    let mut regions = Regions::new(&arr);
    let region3 = {
        let mut counts: std::collections::HashMap<usize, usize> = Default::default();
        for v in 0..PUNCTURES {
            *counts.entry(regions.puncture_region[v]).or_default() += 1;
        }
        *counts
            .iter()
            .find(|&(_, &c)| c == 3)
            .expect("2|3 puncture split")
            .0
    };
    let chart = chart_for(y)?;
    if cs.list.is_empty() {
        let side = regions.side_of_point(&arr, arr.path(0)[0]);
        if side != region3 {
            // An essential curve disjoint from gamma cannot live on the
            // twice-punctured side; reaching this means beta is gamma-parallel.
            return Ok(Projection05::Empty);
        }
        let s = chart_slope(&chart, beta)?;
        return Ok(Projection05::Slopes(vec![s]));
    }
    let n = cs.list.len();
    let mut out: Vec<Slope> = Vec::new();
    let mut seen: std::collections::HashSet<[u64; EDGES]> = Default::default();
    for ai in 0..n {
        let x = cs.along_a[ai];
        let yc = cs.along_a[(ai + 1) % n];
        let interior = arr.a_interior(&cs, x, yc);
        let side = if let Some(&first) = interior.first() {
            regions.side_of_point(&arr, arr.path(0)[first])
        } else {
            regions.flank_region(&arr, &cs.list[x], cs.list[x].a_exit_plus)
        };
        if side != region3 {
            continue;
        }
        let arc_edges: Vec<usize> = interior
            .iter()
            .map(|&i| arr.point_edge(arr.path(0)[i]))
            .collect();
        for forward in [true, false] {
            let mut word = arc_edges.clone();
            word.extend(
                arr.b_interior(&cs, yc, x, forward)
                    .iter()
                    .map(|&i| arr.point_edge(arr.path(1)[i])),
            );
            let mut consider = |c: NormalCurve| {
                if &c == gamma || c == *chart.boundary() || !seen.insert(*c.weights()) {
                    return;
                }
                let s = chart_slope(&chart, &c)
                    .expect("surgered curve lies in the subsurface");
                if !out.contains(&s) {
                    out.push(s);
                }
            };
            match curve_from_word(&word) {
                Ok(c) => consider(c),
                Err(CurveError::Empty) | Err(CurveError::Peripheral) => continue,
                // The surgered word can normalize to a multicurve; each
                // essential component projects.
                Err(CurveError::NotConnected) => {
                    let reduced = tri::reduce_cyclic_word(&word);
                    for cw in tri::orbit_components(&tri::word_weights(&reduced)) {
                        match curve_from_weights(&cw) {
                            Ok(c) => consider(c),
                            Err(CurveError::Peripheral) => continue,
                            Err(e) => unreachable!("surgery component produced {e:?}"),
                        }
                    }
                }
                Err(e) => unreachable!("surgery produced {e:?}"),
            }
        }
    }
    assert!(
        !out.is_empty(),
        "a curve crossing the boundary projects nontrivially"
    );
    sort_slopes(&mut out);
    Ok(Projection05::Slopes(out))
}

/// Minimum Farey distance between the projection sets of two curves.
pub fn subsurface_distance(
    y: &SubsurfaceS05,
    beta: &NormalCurve,
    gamma: &NormalCurve,
) -> Result<u64, CurveError> {
    let pb = subsurface_project(y, beta)?;
    if pb.is_empty() {
        return Err(CurveError::EmptyProjection { which: "first" });
    }
    let pg = subsurface_project(y, gamma)?;
    if pg.is_empty() {
        return Err(CurveError::EmptyProjection { which: "second" });
    }
    let mut best: Option<u64> = None;
    for a in pb.slopes() {
        for b in pg.slopes() {
            let (d, _) = farey_distance(a, b);
            best = Some(best.map_or(d, |x| x.min(d)));
        }
    }
    Ok(best.expect("both projection sets nonempty"))
}

/// Farey diameter of the union of the projection sets (used for simplex
/// images).
pub fn projection_diameter(sets: &[&Projection05]) -> u64 {
    let all: Vec<&Slope> = sets.iter().flat_map(|p| p.slopes().iter()).collect();
    let mut d = 0;
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            d = d.max(farey_distance(all[i], all[j]).0);
        }
    }
    d
}

/// Static triangulation and seed data, exportable for audit.
#[derive(Debug, Clone, Serialize)]
pub struct TriangulationData {
    pub version: u32,
    pub punctures: Vec<&'static str>,
    pub edge_endpoints: Vec<(usize, usize)>,
    pub face_vertices: Vec<[usize; 3]>,
    pub face_edges: Vec<[usize; 3]>,
    pub pair_index_table: Vec<(usize, usize)>,
    pub seed_pairs: Vec<usize>,
    pub seed_weights: Vec<[u64; EDGES]>,
    pub puncture_links: Vec<[u64; EDGES]>,
}

pub fn triangulation() -> TriangulationData {
    TriangulationData {
        version: 1,
        punctures: PUNCTURE_NAMES.to_vec(),
        edge_endpoints: tri::EDGE_ENDPOINTS.to_vec(),
        face_vertices: tri::FACE_VERTICES.to_vec(),
        face_edges: tri::FACE_EDGES.to_vec(),
        pair_index_table: PAIRS.to_vec(),
        seed_pairs: SEED_PAIRS.to_vec(),
        seed_weights: (0..SEED_PAIRS.len()).map(|i| seed(i).weights).collect(),
        puncture_links: (0..PUNCTURES).map(tri::link_vector).collect(),
    }
}

pub fn triangulation_json() -> String {
    serde_json::to_string_pretty(&triangulation()).expect("static data serializes")
}
