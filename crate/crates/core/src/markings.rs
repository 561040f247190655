//! Complete clean markings on the ξ=1 surfaces and their elementary-move
//! graph.
//!
//! A marking is a base slope together with a transversal slope meeting it in
//! one Farey intersection (once on the torus, twice geometrically on the
//! four-punctured sphere).  Elementary moves are Twist⁺/Twist⁻ (retwist the
//! transversal about the base) and Flip (swap the roles); the move graph is
//! locally finite, so balls and the exact BFS metric are computable.

use crate::farey::{farey_distance, MappingClass, Slope, TwistChart};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

/// Default cap on ball radii; the move graph grows exponentially.
pub const DEFAULT_RADIUS_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkingError {
    #[error("base and transversal do not meet in a single Farey intersection")]
    NotTransverse,
    #[error("requested radius {requested} exceeds cap {cap}")]
    RadiusCapExceeded { requested: u32, cap: u32 },
    #[error("annulus axis neither equals nor crosses the base")]
    EmptyProjection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Surface1 {
    TorusOnePuncture,
    SphereFourPunctures,
}

impl Surface1 {
    /// Geometric intersection number of two slopes on this surface, as a
    /// multiple of the Farey intersection |p·s − q·r|.
    pub fn geometric_scale(&self) -> u32 {
        match self {
            Surface1::TorusOnePuncture => 1,
            Surface1::SphereFourPunctures => 2,
        }
    }
}

/// A complete clean marking: base curve plus transverse curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking1 {
    surface: Surface1,
    base: Slope,
    transversal: Slope,
}

impl std::fmt::Display for Marking1 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}; {})", self.base, self.transversal)
    }
}

impl Marking1 {
    pub fn new(
        surface: Surface1,
        base: Slope,
        transversal: Slope,
    ) -> Result<Marking1, MarkingError> {
        if !base.intersection(&transversal).is_one() {
            return Err(MarkingError::NotTransverse);
        }
        Ok(Marking1 {
            surface,
            base,
            transversal,
        })
    }

    pub fn surface(&self) -> Surface1 {
        self.surface
    }

    pub fn base(&self) -> &Slope {
        &self.base
    }

    pub fn transversal(&self) -> &Slope {
        &self.transversal
    }

    /// The marking with the transversal re-twisted n times about the base.
    pub fn retwist(&self, n: i64) -> Marking1 {
        Marking1 {
            surface: self.surface,
            base: self.base.clone(),
            transversal: MappingClass::twist(&self.base).pow(n).apply(&self.transversal),
        }
    }

    /// The marking with base and transversal swapped.
    pub fn flip(&self) -> Marking1 {
        Marking1 {
            surface: self.surface,
            base: self.transversal.clone(),
            transversal: self.base.clone(),
        }
    }

    /// Elementary moves with the default generator set (Twist⁺, Twist⁻,
    /// Flip) in that order.
    pub fn elementary_moves(&self) -> Vec<Marking1> {
        self.elementary_moves_with(false)
    }

    /// Elementary moves, optionally enabling the extra half-twist generators
    /// on the four-punctured sphere.  There the slope-level unit parabolic is
    /// realized by a half twist and the genuine Dehn twist acts as its
    /// square, so with `half_twists` the move list is T^{±2} (full twists)
    /// followed by T^{±1} (half twists) and Flip.  The flag is ignored on the
    /// torus, which has no half twist.
    pub fn elementary_moves_with(&self, half_twists: bool) -> Vec<Marking1> {
        if half_twists && self.surface == Surface1::SphereFourPunctures {
            vec![
                self.retwist(2),
                self.retwist(-2),
                self.retwist(1),
                self.retwist(-1),
                self.flip(),
            ]
        } else {
            vec![self.retwist(1), self.retwist(-1), self.flip()]
        }
    }
}

pub fn marking_new(
    surface: Surface1,
    base: Slope,
    transversal: Slope,
) -> Result<Marking1, MarkingError> {
    Marking1::new(surface, base, transversal)
}

pub fn elementary_moves(mu: &Marking1) -> Vec<Marking1> {
    mu.elementary_moves()
}

/// An exact metric ball in the elementary-move graph.
#[derive(Debug, Clone)]
pub struct MarkingBall {
    center: Marking1,
    radius: u32,
    vertices: Vec<Marking1>,
    index: HashMap<Marking1, usize>,
    edges: Vec<Vec<usize>>,
    distances: Vec<u32>,
}

impl MarkingBall {
    pub fn center(&self) -> &Marking1 {
        &self.center
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertices(&self) -> &[Marking1] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    /// Each undirected edge once, as (i, j) with i < j.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbs) in self.edges.iter().enumerate() {
            for &j in nbs {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn distance_from_center(&self, mu: &Marking1) -> Option<u32> {
        self.index.get(mu).map(|&i| self.distances[i])
    }

    pub fn index_of(&self, mu: &Marking1) -> Option<usize> {
        self.index.get(mu).copied()
    }
}

pub fn marking_ball(center: &Marking1, radius: u32) -> Result<MarkingBall, MarkingError> {
    marking_ball_with(center, radius, DEFAULT_RADIUS_CAP, false)
}

pub fn marking_ball_with(
    center: &Marking1,
    radius: u32,
    cap: u32,
    half_twists: bool,
) -> Result<MarkingBall, MarkingError> {
    if radius > cap {
        return Err(MarkingError::RadiusCapExceeded {
            requested: radius,
            cap,
        });
    }
    let mut vertices = vec![center.clone()];
    let mut index = HashMap::new();
    index.insert(center.clone(), 0usize);
    let mut distances = vec![0u32];
    let mut queue = VecDeque::new();
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        let d = distances[i];
        if d == radius {
            continue;
        }
        for nb in vertices[i].elementary_moves_with(half_twists) {
            if !index.contains_key(&nb) {
                index.insert(nb.clone(), vertices.len());
                distances.push(d + 1);
                queue.push_back(vertices.len());
                vertices.push(nb);
            }
        }
    }
    let mut edges = vec![Vec::new(); vertices.len()];
    for (i, v) in vertices.iter().enumerate() {
        for nb in v.elementary_moves_with(half_twists) {
            if let Some(&j) = index.get(&nb) {
                if !edges[i].contains(&j) {
                    edges[i].push(j);
                }
            }
        }
    }
    Ok(MarkingBall {
        center: center.clone(),
        radius,
        vertices,
        index,
        edges,
        distances,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkingDistance {
    Exact(u64),
    Unreachable(u64),
}

impl MarkingDistance {
    pub fn exact(self) -> Option<u64> {
        match self {
            MarkingDistance::Exact(d) => Some(d),
            MarkingDistance::Unreachable(_) => None,
        }
    }
}

/// Exact BFS distance in the elementary-move graph, up to `cap` moves.
pub fn marking_distance(mu: &Marking1, nu: &Marking1, cap: u64) -> MarkingDistance {
    if mu == nu {
        return MarkingDistance::Exact(0);
    }
    let mut dist: HashMap<Marking1, u64> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(mu.clone(), 0);
    queue.push_back(mu.clone());
    while let Some(cur) = queue.pop_front() {
        let d = dist[&cur];
        if d == cap {
            continue;
        }
        for nb in cur.elementary_moves() {
            if nb == *nu {
                return MarkingDistance::Exact(d + 1);
            }
            dist.entry(nb.clone()).or_insert_with(|| {
                queue.push_back(nb);
                d + 1
            });
        }
    }
    MarkingDistance::Unreachable(cap)
}

/// A projection target: the whole surface or an annulus about a slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Domain1 {
    WholeSurface,
    Annulus(Slope),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection1 {
    Curve(Slope),
    Twist(BigInt),
}

/// π_Y(μ): the base for the whole surface; for an annulus, the twist
/// coordinate of the base — of the transversal when the annulus is about the
/// base itself.
pub fn project_marking(mu: &Marking1, target: &Domain1) -> Result<Projection1, MarkingError> {
    match target {
        Domain1::WholeSurface => Ok(Projection1::Curve(mu.base.clone())),
        Domain1::Annulus(alpha) => restrict_marking(mu, alpha).map(Projection1::Twist),
    }
}

/// μ|_α: the twist coordinate of the marking about the annulus axis α.
pub fn restrict_marking(mu: &Marking1, alpha: &Slope) -> Result<BigInt, MarkingError> {
    let chart = TwistChart::new(alpha);
    if *alpha == mu.base {
        chart
            .twist_coordinate(&mu.transversal)
            .map_err(|_| MarkingError::EmptyProjection)
    } else {
        chart
            .twist_coordinate(&mu.base)
            .map_err(|_| MarkingError::EmptyProjection)
    }
}

/// d_Y(μ, ν): Farey distance of the bases over the whole surface, annular
/// distance of the restrictions over an annulus.
pub fn marking_domain_distance(
    mu: &Marking1,
    nu: &Marking1,
    target: &Domain1,
) -> Result<BigInt, MarkingError> {
    match target {
        Domain1::WholeSurface => Ok(BigInt::from(farey_distance(&mu.base, &nu.base).0)),
        Domain1::Annulus(alpha) => {
            let a = restrict_marking(mu, alpha)?;
            let b = restrict_marking(nu, alpha)?;
            Ok((a - b).abs())
        }
    }
}

/// The annuli relevant to projection audits of a set of markings: every
/// slope occurring as a base or transversal.
pub fn support_annuli(markings: &[Marking1]) -> Vec<Slope> {
    let mut seen = Vec::new();
    for m in markings {
        for s in [&m.base, &m.transversal] {
            if !seen.contains(s) {
                seen.push(s.clone());
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::slope;

    fn s11(bp: i64, bq: i64, tp: i64, tq: i64) -> Marking1 {
        Marking1::new(Surface1::TorusOnePuncture, slope(bp, bq), slope(tp, tq)).unwrap()
    }

    fn origin() -> Marking1 {
        s11(0, 1, 1, 0)
    }

    #[test]
    fn construction_and_transversality() {
        assert!(origin().base() == &slope(0, 1));
        assert_eq!(
            Marking1::new(Surface1::TorusOnePuncture, slope(0, 1), slope(2, 1)),
            Err(MarkingError::NotTransverse)
        );
        assert!(Marking1::new(Surface1::SphereFourPunctures, slope(1, 2), slope(1, 1)).is_ok());
    }

    #[test]
    fn moves_match_convention() {
        let mu = s11(1, 0, 0, 1);
        let moves = mu.elementary_moves();
        assert_eq!(moves.len(), 3);
        // Twist⁺ of (1/0, 0/1) is (1/0, 1/1)
        assert_eq!(moves[0], s11(1, 0, 1, 1));
        assert_eq!(moves[1], s11(1, 0, -1, 1));
        assert_eq!(moves[2], s11(0, 1, 1, 0));
        // Flip is an involution; Twist⁺ and Twist⁻ invert each other
        assert_eq!(moves[2].elementary_moves()[2], mu);
        assert_eq!(moves[0].elementary_moves()[1], mu);
        // the move relation is symmetric
        for nb in mu.elementary_moves() {
            assert!(nb.elementary_moves().contains(&mu), "asymmetric move to {nb}");
        }
    }

    #[test]
    fn half_twist_flag_on_sphere() {
        let mu =
            Marking1::new(Surface1::SphereFourPunctures, slope(1, 0), slope(0, 1)).unwrap();
        assert_eq!(mu.elementary_moves_with(true).len(), 5);
        assert_eq!(mu.elementary_moves_with(false).len(), 3);
        let torus = origin();
        assert_eq!(torus.elementary_moves_with(true).len(), 3);
    }

    #[test]
    fn ball_counts() {
        let b0 = marking_ball(&origin(), 0).unwrap();
        assert_eq!(b0.len(), 1);
        assert!(b0.edge_list().is_empty());
        let b1 = marking_ball(&origin(), 1).unwrap();
        assert_eq!(b1.len(), 4);
        assert!(matches!(
            marking_ball(&origin(), 11),
            Err(MarkingError::RadiusCapExceeded {
                requested: 11,
                cap: 10
            })
        ));
    }

    #[test]
    fn ball_edges_are_mutual_moves() {
        let ball = marking_ball(&origin(), 4).unwrap();
        for (i, j) in ball.edge_list() {
            let (u, v) = (&ball.vertices()[i], &ball.vertices()[j]);
            assert!(u.elementary_moves().contains(v));
            assert!(v.elementary_moves().contains(u));
        }
        // connectivity and exactness of BFS distances
        for (idx, v) in ball.vertices().iter().enumerate() {
            let d = ball.distance_from_center(v).unwrap();
            assert_eq!(
                marking_distance(&origin(), v, 8),
                MarkingDistance::Exact(d as u64),
                "vertex {idx}"
            );
        }
    }

    #[test]
    fn radius_six_golden_count() {
        let ball = marking_ball(&origin(), 6).unwrap();
        assert_eq!(ball.len(), GOLDEN_RADIUS_6);
    }

    // frozen from the first computed run; a change means the move generators
    // or the BFS changed
    const GOLDEN_RADIUS_6: usize = 104;

    #[test]
    fn distance_is_a_metric_on_small_ball() {
        let ball = marking_ball(&origin(), 3).unwrap();
        let vs = ball.vertices();
        let n = vs.len();
        let mut d = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                d[i][j] = marking_distance(&vs[i], &vs[j], 10).exact().unwrap();
            }
        }
        for i in 0..n {
            assert_eq!(d[i][i], 0);
            for j in 0..n {
                assert_eq!(d[i][j], d[j][i]);
                if i != j {
                    assert!(d[i][j] >= 1);
                }
                for k in 0..n {
                    assert!(d[i][k] <= d[i][j] + d[j][k]);
                }
            }
        }
    }

    #[test]
    fn twist_chain_distance() {
        let mu = origin();
        let nu = Marking1 {
            surface: Surface1::TorusOnePuncture,
            base: slope(0, 1),
            transversal: MappingClass::twist(&slope(0, 1)).pow(5).apply(&slope(1, 0)),
        };
        assert_eq!(marking_distance(&mu, &nu, 10), MarkingDistance::Exact(5));
    }

    #[test]
    fn projections() {
        let mu = s11(0, 1, 1, 0);
        assert_eq!(
            project_marking(&mu, &Domain1::WholeSurface).unwrap(),
            Projection1::Curve(slope(0, 1))
        );
        // annulus about the base reads the transversal's twist
        let chart = TwistChart::new(&slope(0, 1));
        assert_eq!(
            project_marking(&mu, &Domain1::Annulus(slope(0, 1))).unwrap(),
            Projection1::Twist(chart.twist_coordinate(&slope(1, 0)).unwrap())
        );
        // any other annulus reads the base's twist
        let alpha = slope(2, 5);
        let chart_a = TwistChart::new(&alpha);
        assert_eq!(
            restrict_marking(&mu, &alpha).unwrap(),
            chart_a.twist_coordinate(&slope(0, 1)).unwrap()
        );
    }

    #[test]
    fn elementary_move_projection_bound() {
        // every edge of a ball moves every domain projection by at most 4
        let ball = marking_ball(&origin(), 4).unwrap();
        let mut domains = vec![Domain1::WholeSurface];
        for a in support_annuli(ball.vertices()) {
            domains.push(Domain1::Annulus(a));
        }
        for (i, j) in ball.edge_list() {
            let (u, v) = (&ball.vertices()[i], &ball.vertices()[j]);
            for dom in &domains {
                let d = marking_domain_distance(u, v, dom).unwrap();
                assert!(
                    d <= BigInt::from(4),
                    "edge ({u}, {v}) moves {dom:?} by {d}"
                );
            }
        }
    }

    #[test]
    fn restriction_stable_under_flip() {
        // when the annulus axis differs from both curves, restriction sees
        // the base; flipping swaps in the transversal, which crosses the base
        // once, so the coordinates agree within 1
        let ball = marking_ball(&origin(), 4).unwrap();
        let annuli = support_annuli(ball.vertices());
        for mu in ball.vertices() {
            let flipped = mu.elementary_moves()[2].clone();
            for alpha in &annuli {
                if alpha == mu.base() || alpha == mu.transversal() {
                    continue;
                }
                let a = restrict_marking(mu, alpha).unwrap();
                let b = restrict_marking(&flipped, alpha).unwrap();
                assert!(
                    (a - b).abs() <= BigInt::one(),
                    "flip instability at {mu} about {alpha}"
                );
            }
        }
    }

    #[test]
    fn distance_formula_with_pinned_constants() {
        // (1/12)·d − 40 ≤ Σ_{d_Y > 10} d_Y ≤ 12·d + 40 over a radius-4 ball
        let ball = marking_ball(&origin(), 4).unwrap();
        let vs = ball.vertices();
        let mut domains = vec![Domain1::WholeSurface];
        for a in support_annuli(vs) {
            domains.push(Domain1::Annulus(a));
        }
        let threshold = BigInt::from(10);
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let d = marking_distance(&vs[i], &vs[j], 12).exact().unwrap() as i64;
                let mut sum = BigInt::from(0);
                for dom in &domains {
                    let dy = marking_domain_distance(&vs[i], &vs[j], dom).unwrap();
                    if dy > threshold {
                        sum += dy;
                    }
                }
                let sum: i64 = num_traits::ToPrimitive::to_i64(&sum).unwrap();
                assert!(sum <= 12 * d + 40, "upper bound fails: {sum} vs d={d}");
                assert!(sum >= d / 12 - 40, "lower bound fails: {sum} vs d={d}");
            }
        }
    }
}
