//! The pants graph of the five-punctured sphere. A vertex is a pair of
//! disjoint essential curves; an elementary move keeps one curve and replaces
//! the other by a Farey neighbor inside the complementary four-holed sphere.
//! Distance is estimated by thresholded subsurface-projection sums.

use crate::curves05::{
    chart_for, chart_slope, intersection_number, side_subsurface, slope_to_curve,
    subsurface_project, CurveError, NormalCurve, Projection05,
};
use crate::farey::{farey_distance, Slope};
use crate::profile::CalibrationProfile;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PantsError {
    #[error("curves intersect in {0} points")]
    CurvesIntersect(u64),
    #[error("the two curves coincide")]
    CurvesEqual,
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// An unordered pair of disjoint essential curves: a pants decomposition of
/// the five-punctured sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PantsVertex {
    first: NormalCurve,
    second: NormalCurve,
}

impl PantsVertex {
    pub fn curves(&self) -> [&NormalCurve; 2] {
        [&self.first, &self.second]
    }

    pub fn contains(&self, c: &NormalCurve) -> bool {
        &self.first == c || &self.second == c
    }

    pub fn shared_with(&self, other: &PantsVertex) -> usize {
        self.curves()
            .iter()
            .filter(|c| other.contains(c))
            .count()
    }
}

pub fn pants_vertex(a: &NormalCurve, b: &NormalCurve) -> Result<PantsVertex, PantsError> {
    if a == b {
        return Err(PantsError::CurvesEqual);
    }
    let i = intersection_number(a, b);
    if i > 0 {
        return Err(PantsError::CurvesIntersect(i));
    }
    // Store in a canonical order so equality and hashing are order-free.
    let (first, second) = if a.weights() <= b.weights() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    Ok(PantsVertex { first, second })
}

/// Enumeration window for elementary moves: the pants graph is locally
/// infinite, so neighbors are listed up to this twist offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PantsMoveWindow {
    pub twist_window: u64,
}

impl PantsMoveWindow {
    pub fn new(twist_window: u64) -> PantsMoveWindow {
        assert!(twist_window >= 1, "window must be positive");
        PantsMoveWindow { twist_window }
    }
}

/// The Farey neighbors of `s` at twist offsets -W..=W around the canonical
/// adjacent slope (the one whose denominator is reduced mod s).
fn farey_neighbors(s: &Slope, window: u64) -> Vec<Slope> {
    let p = s.numer().clone();
    let q = s.denom().clone();
    let (r0, t0) = if q.is_zero() {
        (BigInt::from(0), BigInt::from(1))
    } else {
        // x*p + y*q = 1; pick t0 = x mod q, so t0*p - r0*q = 1 with 0 <= t0 < q.
        let e = p.extended_gcd(&q);
        debug_assert!(e.gcd == BigInt::from(1) || e.gcd == BigInt::from(-1));
        let (x, _y) = if e.gcd.is_negative() {
            (-e.x, -e.y)
        } else {
            (e.x, e.y)
        };
        let t0 = x.mod_floor(&q);
        let r0 = (&t0 * &p - 1) / &q;
        (r0, t0)
    };
    let w = window as i64;
    (-w..=w)
        .map(|k| {
            Slope::new(&r0 + k * &p, &t0 + k * &q).expect("farey neighbor is a valid slope")
        })
        .collect()
}

/// All elementary moves from `p` within the window: for each curve kept
/// fixed, every windowed Farey neighbor of the other curve in the chart of
/// the complementary four-holed sphere.
pub fn pants_moves(
    p: &PantsVertex,
    window: PantsMoveWindow,
) -> Result<Vec<PantsVertex>, PantsError> {
    let [a, b] = p.curves();
    let mut out: Vec<PantsVertex> = Vec::new();
    for (fixed, moving) in [(a, b), (b, a)] {
        let y = side_subsurface(fixed);
        let chart = chart_for(&y)?;
        let s = chart_slope(&chart, moving)?;
        for t in farey_neighbors(&s, window.twist_window) {
            let replacement = slope_to_curve(&chart, &t);
            let v = pants_vertex(fixed, &replacement)
                .expect("a chart slope yields a curve disjoint from the boundary");
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out.sort_by(|u, v| {
        (u.first.weights(), u.second.weights()).cmp(&(v.first.weights(), v.second.weights()))
    });
    Ok(out)
}

/// One summand of the pants distance estimate. Four-holed-sphere domains are
/// exact (lower = upper); the whole-surface term is a bracket.
#[derive(Debug, Clone, PartialEq)]
pub struct PantsTerm {
    pub domain: String,
    pub lower: Rational64,
    pub upper: Rational64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PantsEstimate {
    /// Thresholded sums of the term brackets.
    pub sum_lower: Rational64,
    pub sum_upper: Rational64,
    /// The sums rescaled by the fitted path constants into a distance bracket.
    pub lower: Rational64,
    pub upper: Rational64,
    pub terms: Vec<PantsTerm>,
    /// Domains or projections skipped because their size exceeded the
    /// computation caps; never silently dropped.
    pub skipped: Vec<String>,
}

/// Caps keeping the estimate computable: domains with heavier boundaries and
/// projections with more boundary crossings are skipped and recorded.
pub const PANTS_WEIGHT_CAP: u64 = 512;
pub const PANTS_CROSSING_CAP: u64 = 4096;

fn domain_label(c: &NormalCurve) -> String {
    match c.as_pair() {
        Some((x, y)) => format!("Y({x},{y})"),
        None => format!("Y{:?}", c.weights()),
    }
}

fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 1);
    64 - (x - 1).leading_zeros() as u64
}

fn project_set(
    y: &crate::curves05::SubsurfaceS05,
    v: &PantsVertex,
    skipped: &mut Vec<String>,
) -> Vec<Projection05> {
    let mut out = Vec::new();
    for c in v.curves() {
        if c != y.boundary() && intersection_number(c, y.boundary()) > PANTS_CROSSING_CAP {
            skipped.push(format!(
                "projection of weight-{} curve into {}",
                c.total_weight(),
                domain_label(y.boundary())
            ));
            continue;
        }
        if let Ok(p) = subsurface_project(y, c) {
            if !p.is_empty() {
                out.push(p);
            }
        }
    }
    out
}

fn diameter_of(sets: &[Projection05]) -> u64 {
    let refs: Vec<&Projection05> = sets.iter().collect();
    crate::curves05::projection_diameter(&refs)
}

/// Thresholded projection-sum estimate of the pants distance. Summands are
/// the diameters of the joint projections to the four-holed sides of a
/// support set of curves (the vertices' curves and their mutual surgered
/// projections) plus a bracketed whole-surface term; the bracket is rescaled
/// by the profile's fitted path constants.
pub fn pants_distance_estimate(
    p: &PantsVertex,
    q: &PantsVertex,
    threshold: i64,
    profile: &CalibrationProfile,
) -> Result<PantsEstimate, PantsError> {
    assert!(threshold >= 4, "threshold must be at least 4");
    let mut support: Vec<NormalCurve> = Vec::new();
    let push = |c: NormalCurve, support: &mut Vec<NormalCurve>| {
        if !support.contains(&c) {
            support.push(c);
        }
    };
    for c in p.curves().into_iter().chain(q.curves()) {
        push(c.clone(), &mut support);
    }
    let mut skipped: Vec<String> = Vec::new();
    // Surgered projections of each vertex's curves into the other's sides.
    for (holder, other) in [(p, q), (q, p)] {
        for gamma in holder.curves() {
            if gamma.total_weight() > PANTS_WEIGHT_CAP {
                skipped.push(format!("support side of {}", domain_label(gamma)));
                continue;
            }
            let y = side_subsurface(gamma);
            let chart = match chart_for(&y) {
                Ok(c) => c,
                Err(CurveError::ChartUnavailable) => continue,
                Err(e) => return Err(e.into()),
            };
            for c in other.curves() {
                if c != gamma && intersection_number(c, gamma) > PANTS_CROSSING_CAP {
                    skipped.push(format!(
                        "support projection into {}",
                        domain_label(gamma)
                    ));
                    continue;
                }
                if let Ok(Projection05::Slopes(slopes)) = subsurface_project(&y, c) {
                    push(slope_to_curve(&chart, &slopes[0]), &mut support);
                }
            }
        }
    }

    let mut terms: Vec<PantsTerm> = Vec::new();
    for gamma in &support {
        if gamma.total_weight() > PANTS_WEIGHT_CAP {
            skipped.push(format!("domain {}", domain_label(gamma)));
            continue;
        }
        let y = side_subsurface(gamma);
        let pp = project_set(&y, p, &mut skipped);
        let pq = project_set(&y, q, &mut skipped);
        if pp.is_empty() || pq.is_empty() {
            continue;
        }
        let all: Vec<Projection05> = pp.into_iter().chain(pq).collect();
        let d = Rational64::from_integer(diameter_of(&all) as i64);
        terms.push(PantsTerm {
            domain: domain_label(gamma),
            lower: d,
            upper: d,
        });
    }

    // Whole-surface term: exact at small distances, coarsely bracketed above
    // by the intersection-number logarithm.
    let shares = p.shared_with(q) > 0;
    let (ds_lower, ds_upper) = if p == q {
        (Rational64::zero(), Rational64::zero())
    } else if shares
        || p.curves()
            .iter()
            .any(|a| q.curves().iter().any(|b| intersection_number(a, b) == 0))
    {
        let v = Rational64::from_integer(1);
        (v, v)
    } else {
        let imax = p
            .curves()
            .into_iter()
            .flat_map(|a| q.curves().map(|b| intersection_number(a, b)))
            .max()
            .unwrap();
        let upper = 2 + ceil_log2(ceil_log2(imax).max(1)) as i64;
        (
            Rational64::from_integer(2),
            Rational64::from_integer(upper),
        )
    };
    terms.push(PantsTerm {
        domain: "S".to_string(),
        lower: ds_lower,
        upper: ds_upper,
    });

    let thr = Rational64::from_integer(threshold);
    let sum_lower: Rational64 = terms
        .iter()
        .filter(|t| t.lower > thr)
        .map(|t| t.lower)
        .sum();
    let sum_upper: Rational64 = terms
        .iter()
        .filter(|t| t.upper > thr)
        .map(|t| t.upper)
        .sum();
    let k = Rational64::approximate_float(profile.k_path).expect("finite path constant");
    let c = Rational64::approximate_float(profile.c_path).expect("finite path constant");
    let lower = (sum_lower / k - c).max(Rational64::zero());
    let upper = k * sum_upper + c;
    Ok(PantsEstimate {
        sum_lower,
        sum_upper,
        lower,
        upper,
        terms,
        skipped,
    })
}

/// The exact Farey distance between two curves inside the side of `fixed`,
/// with the witnessing geodesic turned into an explicit move path.
pub fn move_path_within_side(
    fixed: &NormalCurve,
    from: &NormalCurve,
    to: &NormalCurve,
) -> Result<Vec<PantsVertex>, PantsError> {
    let y = side_subsurface(fixed);
    let chart = chart_for(&y)?;
    let a = chart_slope(&chart, from)?;
    let b = chart_slope(&chart, to)?;
    let (_, geo) = farey_distance(&a, &b);
    let mut path = Vec::new();
    for s in geo.vertices() {
        let c = slope_to_curve(&chart, s);
        path.push(pants_vertex(fixed, &c).expect("geodesic vertices stay in the side"));
    }
    Ok(path)
}
