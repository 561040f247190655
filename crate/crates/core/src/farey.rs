//! Exact engine for the curve complexes of S_{1,1} and S_{0,4}.
//!
//! Both complexes are isometric to the classical Farey graph: vertices are
//! slopes p/q (with ∞ = 1/0), and two slopes span an edge exactly when
//! |ps − qr| = 1.  Annular complexes are handled through twist charts: an
//! SL(2,Z) change of coordinates moving the annulus axis to ∞, after which
//! the twist coordinate of a crossing slope is a plain floor of a rational.
//!
//! All arithmetic is arbitrary precision; all values are immutable and all
//! operations are pure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum FareyError {
    #[error("slope 0/0 is not a slope")]
    ZeroSlopePair,
    #[error("curve does not cross the annulus (equals its axis)")]
    DoesNotCrossAnnulus,
    #[error("geodesic vertex {0} is disjoint from the annulus domain")]
    VertexDisjointFromDomain(Slope),
    #[error("matrix has determinant != 1")]
    NotUnimodular,
    #[error("slope string `{0}` is malformed")]
    ParseError(String),
}

/// A reduced rational p/q naming a curve on a ξ=1 surface; ∞ = 1/0 allowed.
///
/// Canonical form: gcd(|p|, q) = 1, q ≥ 0, and q = 0 forces p = 1, so two
/// slopes are equal iff their fields are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    /// Canonicalize an arbitrary pair (p, q) ≠ (0, 0).
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope, FareyError> {
        let mut p: BigInt = p.into();
        let mut q: BigInt = q.into();
        if p.is_zero() && q.is_zero() {
            return Err(FareyError::ZeroSlopePair);
        }
        if q.is_zero() {
            return Ok(Slope {
                p: BigInt::one(),
                q,
            });
        }
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let g = p.gcd(&q);
        Ok(Slope {
            p: p / &g,
            q: q / g,
        })
    }

    pub fn infinity() -> Slope {
        Slope {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn zero() -> Slope {
        Slope {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    /// |p_a·q_b − q_a·p_b|.  Zero iff the slopes are equal.  This is the
    /// geometric intersection number on S_{1,1}; on S_{0,4} the geometric
    /// count is twice this.
    pub fn intersection(&self, other: &Slope) -> BigInt {
        (&self.p * &other.q - &self.q * &other.p).abs()
    }

    /// Farey adjacency: intersection exactly 1.
    pub fn adjacent(&self, other: &Slope) -> bool {
        self.intersection(other).is_one()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = FareyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| FareyError::ParseError(s.into()))?;
        let p = BigInt::from_str(p).map_err(|_| FareyError::ParseError(s.into()))?;
        let q = BigInt::from_str(q).map_err(|_| FareyError::ParseError(s.into()))?;
        Slope::new(p, q)
    }
}

/// Convenience for tests and seed data: `slope(3, 4)` = 3/4.
pub fn slope(p: i64, q: i64) -> Slope {
    Slope::new(p, q).expect("nonzero pair")
}

/// An element of SL(2,Z) acting on slopes by fractions, optionally with a
/// record of the twist word that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClass {
    /// Row-major [a, b, c, d] for [[a, b], [c, d]], det = 1.
    mat: [BigInt; 4],
    word: Option<Vec<(Slope, i64)>>,
}

impl MappingClass {
    pub fn identity() -> MappingClass {
        MappingClass {
            mat: [
                BigInt::one(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::one(),
            ],
            word: Some(vec![]),
        }
    }

    pub fn from_matrix(mat: [BigInt; 4]) -> Result<MappingClass, FareyError> {
        let det = &mat[0] * &mat[3] - &mat[1] * &mat[2];
        if !det.is_one() {
            return Err(FareyError::NotUnimodular);
        }
        Ok(MappingClass { mat, word: None })
    }

    /// The Dehn twist about `axis` = p/q: I + (p,q)ᵀ(−q,p).
    pub fn twist(axis: &Slope) -> MappingClass {
        let (p, q) = (&axis.p, &axis.q);
        MappingClass {
            mat: [
                BigInt::one() - p * q,
                p * p,
                -(q * q),
                BigInt::one() + p * q,
            ],
            word: Some(vec![(axis.clone(), 1)]),
        }
    }

    /// Product of twists, leftmost letter applied last (so the word reads as
    /// a composition T₁ ∘ T₂ ∘ ⋯).
    pub fn from_word(word: &[(Slope, i64)]) -> MappingClass {
        let mut m = MappingClass::identity();
        for (axis, n) in word {
            m = m.compose(&MappingClass::twist(axis).pow(*n));
        }
        m.word = Some(word.to_vec());
        m
    }

    pub fn word(&self) -> Option<&[(Slope, i64)]> {
        self.word.as_deref()
    }

    pub fn matrix(&self) -> &[BigInt; 4] {
        &self.mat
    }

    pub fn compose(&self, rhs: &MappingClass) -> MappingClass {
        let a = &self.mat;
        let b = &rhs.mat;
        let word = match (&self.word, &rhs.word) {
            (Some(u), Some(v)) => {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                Some(w)
            }
            _ => None,
        };
        MappingClass {
            mat: [
                &a[0] * &b[0] + &a[1] * &b[2],
                &a[0] * &b[1] + &a[1] * &b[3],
                &a[2] * &b[0] + &a[3] * &b[2],
                &a[2] * &b[1] + &a[3] * &b[3],
            ],
            word,
        }
    }

    pub fn inverse(&self) -> MappingClass {
        let m = &self.mat;
        let word = self.word.as_ref().map(|w| {
            w.iter()
                .rev()
                .map(|(axis, n)| (axis.clone(), -n))
                .collect()
        });
        MappingClass {
            mat: [m[3].clone(), -&m[1], -&m[2], m[0].clone()],
            word,
        }
    }

    pub fn pow(&self, n: i64) -> MappingClass {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = MappingClass::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    /// Fractional-linear action: p/q ↦ (ap + bq)/(cp + dq).
    pub fn apply(&self, s: &Slope) -> Slope {
        let m = &self.mat;
        let num = &m[0] * &s.p + &m[1] * &s.q;
        let den = &m[2] * &s.p + &m[3] * &s.q;
        Slope::new(num, den).expect("unimodular image of a slope is a slope")
    }
}

/// Identification of the annular complex around `axis` with Z.
///
/// The matrix is the canonical SL(2,Z) element [[x, y], [−q, p]] with
/// xp + yq = 1 and 0 ≤ x < q (identity for the axis 1/0); it takes the axis
/// to 1/0 exactly, and the twist coordinate of a crossing slope is the floor
/// of its image.  Floor commutes with integer translation, which makes twist
/// equivariance exact: t(T_axisⁿ β) = t(β) + n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistChart {
    axis: Slope,
    matrix: MappingClass,
}

impl TwistChart {
    pub fn new(axis: &Slope) -> TwistChart {
        let (p, q) = (&axis.p, &axis.q);
        let matrix = if q.is_zero() {
            MappingClass::identity()
        } else {
            let e = p.extended_gcd(q);
            debug_assert!(e.gcd.is_one());
            // x ≡ p⁻¹ (mod q), reduced into [0, q)
            let x = e.x.mod_floor(q);
            let y = (BigInt::one() - &x * p) / q;
            MappingClass {
                mat: [x, y, -q, p.clone()],
                word: None,
            }
        };
        TwistChart {
            axis: axis.clone(),
            matrix,
        }
    }

    pub fn axis(&self) -> &Slope {
        &self.axis
    }

    pub fn matrix(&self) -> &MappingClass {
        &self.matrix
    }

    /// Twist coordinate of a slope crossing the annulus.
    pub fn twist_coordinate(&self, beta: &Slope) -> Result<BigInt, FareyError> {
        if *beta == self.axis {
            return Err(FareyError::DoesNotCrossAnnulus);
        }
        let image = self.matrix.apply(beta);
        debug_assert!(image.q.is_positive());
        Ok(image.p.div_floor(&image.q))
    }
}

/// d_α(β, γ) = |t_α(β) − t_α(γ)|, the implemented annular-complex distance.
pub fn annular_distance(axis: &Slope, beta: &Slope, gamma: &Slope) -> Result<BigInt, FareyError> {
    let chart = TwistChart::new(axis);
    Ok((chart.twist_coordinate(beta)? - chart.twist_coordinate(gamma)?).abs())
}

/// An explicit geodesic in the Farey graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyGeodesic {
    vertices: Vec<Slope>,
}

impl FareyGeodesic {
    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    pub fn len_edges(&self) -> u64 {
        (self.vertices.len() - 1) as u64
    }

    pub fn first(&self) -> &Slope {
        self.vertices.first().expect("geodesic is nonempty")
    }

    pub fn last(&self) -> &Slope {
        self.vertices.last().expect("geodesic is nonempty")
    }

    /// Consecutive vertices are Farey-adjacent and no vertex repeats.
    pub fn is_valid_path(&self) -> bool {
        let distinct: std::collections::HashSet<_> = self.vertices.iter().collect();
        distinct.len() == self.vertices.len()
            && self.vertices.windows(2).all(|w| w[0].adjacent(&w[1]))
    }
}

/// The two Farey neighbors of p/q (q ≥ 2) with strictly smaller denominator.
fn parents(s: &Slope) -> (Slope, Slope) {
    let (p, q) = (&s.p, &s.q);
    debug_assert!(*q >= BigInt::from(2));
    let e = p.extended_gcd(q);
    let mut s0 = e.x.mod_floor(q);
    if s0.is_zero() {
        s0 = q.clone();
    }
    let r0 = (p * &s0 - BigInt::one()) / q;
    let a = Slope {
        p: r0.clone(),
        q: s0.clone(),
    };
    let b = Slope { p: p - r0, q: q - s0 };
    (a, b)
}

/// Exact distance to ∞ = 1/0, with a witnessing parent chain.
///
/// Geodesics to ∞ may always be chosen with strictly decreasing
/// denominators, so the distance satisfies
/// d(p/q) = 1 + min(d over the two smaller-denominator neighbors);
/// memoization keeps the recursion linear in the continued-fraction data.
fn distance_to_infinity(start: &Slope) -> (u64, Vec<Slope>) {
    // memo: slope -> (distance, preferred parent)
    let mut memo: HashMap<Slope, (u64, Option<Slope>)> = HashMap::new();
    let mut stack = vec![start.clone()];
    while let Some(s) = stack.pop() {
        if memo.contains_key(&s) {
            continue;
        }
        if s.q.is_zero() {
            memo.insert(s, (0, None));
            continue;
        }
        if s.q.is_one() {
            memo.insert(s, (1, Some(Slope::infinity())));
            continue;
        }
        let (a, b) = parents(&s);
        match (memo.get(&a), memo.get(&b)) {
            (Some(&(da, _)), Some(&(db, _))) => {
                // deterministic tie-break: smaller denominator, then smaller slope
                let pick = if da < db || (da == db && (&a.q, &a.p) < (&b.q, &b.p)) {
                    (da + 1, Some(a))
                } else {
                    (db + 1, Some(b))
                };
                memo.insert(s, pick);
            }
            (ma, mb) => {
                let need_a = ma.is_none();
                let need_b = mb.is_none();
                stack.push(s);
                if need_a {
                    stack.push(a);
                }
                if need_b {
                    stack.push(b);
                }
            }
        }
    }
    let (d, _) = memo[start];
    let mut path = vec![start.clone()];
    let mut cur = start.clone();
    while let Some((_, Some(next))) = memo.get(&cur).cloned() {
        path.push(next.clone());
        cur = next;
    }
    (d, path)
}

/// Exact Farey-graph distance together with one witnessing geodesic
/// (the canonical pivot geodesic).
pub fn farey_distance(a: &Slope, b: &Slope) -> (u64, FareyGeodesic) {
    if a == b {
        return (
            0,
            FareyGeodesic {
                vertices: vec![a.clone()],
            },
        );
    }
    // Move b to ∞, run the pivot recursion, map back.
    let m = TwistChart::new(b).matrix().clone();
    let a_image = m.apply(a);
    let (d, path) = distance_to_infinity(&a_image);
    let minv = m.inverse();
    let vertices: Vec<Slope> = path.iter().map(|v| minv.apply(v)).collect();
    debug_assert_eq!(vertices.first(), Some(a));
    debug_assert_eq!(vertices.last(), Some(b));
    (d, FareyGeodesic { vertices })
}

/// Diameter of the twist coordinates of a geodesic's vertices in the annulus
/// around `axis`: the finite-scale shadow of the bounded geodesic image bound.
pub fn bounded_geodesic_image_probe(
    axis: &Slope,
    g: &FareyGeodesic,
) -> Result<BigInt, FareyError> {
    let chart = TwistChart::new(axis);
    let mut min: Option<BigInt> = None;
    let mut max: Option<BigInt> = None;
    for v in g.vertices() {
        let t = chart
            .twist_coordinate(v)
            .map_err(|_| FareyError::VertexDisjointFromDomain(v.clone()))?;
        min = Some(min.map_or(t.clone(), |m| m.min(t.clone())));
        max = Some(max.map_or(t.clone(), |m| m.max(t)));
    }
    Ok(max.unwrap() - min.unwrap())
}

#[cfg(test)]
pub(crate) mod bfs_oracle {
    //! Independent breadth-first oracle for Farey distances, pruned to a
    //! magnitude cap.  Uses only the neighbor parametrization
    //! r/s adjacent to p/q  ⇔  (r, s) = (r₀ + np, s₀ + nq);
    //! shares no code with the pivot recursion above and works in plain i64.

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

    // extended Euclid: returns (x, y) with p·x + q·y = gcd(p, q)
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
        // one solution of p·s0 − q·r0 = 1
        let (x, _) = egcd(p, q);
        let mut s0 = x.rem_euclid(q);
        if s0 == 0 {
            s0 = q;
        }
        debug_assert_eq!((p * s0 - 1).rem_euclid(q), 0);
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
            s.numer().to_i64().expect("oracle slope fits in i64"),
            s.denom().to_i64().expect("oracle slope fits in i64"),
        )
    }

    /// Single-pass BFS from `a` with all visited slopes capped to
    /// |p|, |q| ≤ `cap`; stops once every target is resolved.  Targets not
    /// reached within the cap are absent from the result.
    pub fn bfs_distances(a: &Slope, targets: &[Slope], cap: i64) -> HashMap<Slope, u64> {
        let start = key(a);
        let mut wanted: HashMap<(i64, i64), Slope> =
            targets.iter().map(|t| (key(t), t.clone())).collect();
        let mut found = HashMap::new();
        if let Some(t) = wanted.remove(&start) {
            found.insert(t, 0);
        }
        let mut dist: HashMap<(i64, i64), u64> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(start, 0);
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
                    if let Some(t) = wanted.remove(&nb) {
                        found.insert(t, d + 1);
                    }
                }
            }
        }
        found
    }

    /// BFS distance in the Farey graph with all visited slopes capped to
    /// |p|, |q| ≤ `cap`.  Returns None if b is not reached within the cap.
    pub fn bfs_distance(a: &Slope, b: &Slope, cap: i64) -> Option<u64> {
        bfs_distances(a, std::slice::from_ref(b), cap).get(b).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization() {
        assert_eq!(slope(-2, -4), slope(1, 2));
        assert_eq!(slope(3, 0), Slope::infinity());
        assert_eq!(slope(0, 7), Slope::zero());
        assert_eq!(Slope::new(0, 0), Err(FareyError::ZeroSlopePair));
        assert_eq!(slope(-3, 6), Slope::new(1, -2).unwrap());
    }

    #[test]
    fn intersection_basics() {
        assert_eq!(Slope::infinity().intersection(&slope(3, 5)), BigInt::from(5));
        assert_eq!(slope(0, 1).intersection(&Slope::infinity()), BigInt::from(1));
        assert_eq!(slope(2, 5).intersection(&slope(2, 5)), BigInt::from(0));
    }

    #[test]
    fn mapping_class_action() {
        let id = MappingClass::identity();
        assert_eq!(id.apply(&slope(3, 7)), slope(3, 7));
        let shear = MappingClass::from_matrix([
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(1),
        ])
        .unwrap();
        assert_eq!(shear.apply(&slope(2, 5)), slope(7, 5));
        let t = MappingClass::twist(&slope(2, 3));
        assert_eq!(t.apply(&slope(2, 3)), slope(2, 3));
    }

    #[test]
    fn twist_word_reproduces_matrix() {
        let w = vec![(Slope::infinity(), 2), (slope(0, 1), -3), (slope(1, 1), 1)];
        let m = MappingClass::from_word(&w);
        let mut prod = MappingClass::identity();
        for (axis, n) in &w {
            prod = prod.compose(&MappingClass::twist(axis).pow(*n));
        }
        assert_eq!(m.matrix(), prod.matrix());
        let inv = m.inverse();
        assert_eq!(m.compose(&inv).matrix(), MappingClass::identity().matrix());
    }

    #[test]
    fn chart_examples_from_convention() {
        // chart at ∞ is the identity: 5/2 ↦ floor(5/2) = 2
        let chart = TwistChart::new(&Slope::infinity());
        assert_eq!(chart.twist_coordinate(&slope(5, 2)).unwrap(), BigInt::from(2));
        // chart at 0/1 maps 2/5 ↦ −5/2, floor −3
        let chart0 = TwistChart::new(&slope(0, 1));
        assert_eq!(
            chart0.twist_coordinate(&slope(2, 5)).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(
            chart0.twist_coordinate(&slope(0, 1)),
            Err(FareyError::DoesNotCrossAnnulus)
        );
    }

    #[test]
    fn twist_equivariance_small() {
        let axis = slope(3, 5);
        let chart = TwistChart::new(&axis);
        let beta = slope(1, 2);
        let t0 = chart.twist_coordinate(&beta).unwrap();
        for n in [-4i64, -1, 1, 2, 9] {
            let image = MappingClass::twist(&axis).pow(n).apply(&beta);
            assert_eq!(
                chart.twist_coordinate(&image).unwrap(),
                &t0 + BigInt::from(n)
            );
        }
    }

    #[test]
    fn annular_distance_examples() {
        let inf = Slope::infinity();
        assert_eq!(
            annular_distance(&inf, &slope(1, 1), &slope(7, 1)).unwrap(),
            BigInt::from(6)
        );
        let axis = slope(2, 7);
        let beta = slope(1, 4);
        assert_eq!(
            annular_distance(&axis, &beta, &beta).unwrap(),
            BigInt::from(0)
        );
        let five = MappingClass::twist(&axis).pow(5).apply(&beta);
        assert_eq!(
            annular_distance(&axis, &beta, &five).unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn distance_examples() {
        assert_eq!(farey_distance(&slope(0, 1), &Slope::infinity()).0, 1);
        assert_eq!(farey_distance(&slope(4, 9), &slope(4, 9)).0, 0);
        let (d, g) = farey_distance(&slope(0, 1), &slope(2, 5));
        assert_eq!(d, 2);
        assert!(g.is_valid_path());
        assert_eq!(g.len_edges(), 2);
    }

    #[test]
    fn distance_of_pseudo_anosov_iterate() {
        // ρ = [[2,1],[1,1]]; d(1/0, ρ⁴·(1/0)) matched against the BFS oracle.
        let rho = MappingClass::from_matrix([
            BigInt::from(2),
            BigInt::from(1),
            BigInt::from(1),
            BigInt::from(1),
        ])
        .unwrap();
        let image = rho.pow(4).apply(&Slope::infinity());
        let (d, g) = farey_distance(&Slope::infinity(), &image);
        assert!(g.is_valid_path());
        assert_eq!(g.len_edges(), d);
        let oracle = bfs_oracle::bfs_distance(&Slope::infinity(), &image, 1_000).unwrap();
        assert_eq!(d, oracle);
    }

    #[test]
    fn distance_matches_bfs_oracle_small_grid() {
        // modest in-module version; the full |p|,|q| ≤ 30 sweep is in the
        // acceptance suite
        let mut slopes = vec![Slope::infinity()];
        for q in 1i64..=8 {
            for p in -8i64..=8 {
                if num_integer::gcd(p.abs(), q) == 1 {
                    slopes.push(slope(p, q));
                }
            }
        }
        let base = slope(0, 1);
        let oracle = bfs_oracle::bfs_distances(&base, &slopes, 1_000);
        for s in &slopes {
            let (d, g) = farey_distance(&base, s);
            assert_eq!(Some(&d), oracle.get(s), "mismatch at {s}");
            assert!(g.is_valid_path());
            assert_eq!(g.len_edges(), d);
        }
    }

    #[test]
    fn bgi_probe_direct() {
        let g = FareyGeodesic {
            vertices: vec![slope(1, 1), slope(2, 1), slope(3, 1)],
        };
        assert!(g.is_valid_path());
        let chart = TwistChart::new(&slope(0, 1));
        let coords: Vec<BigInt> = g
            .vertices()
            .iter()
            .map(|v| chart.twist_coordinate(v).unwrap())
            .collect();
        let expect = coords.iter().max().unwrap() - coords.iter().min().unwrap();
        assert_eq!(
            bounded_geodesic_image_probe(&slope(0, 1), &g).unwrap(),
            expect
        );
        let single = FareyGeodesic {
            vertices: vec![slope(5, 3)],
        };
        assert_eq!(
            bounded_geodesic_image_probe(&slope(0, 1), &single).unwrap(),
            BigInt::from(0)
        );
        let through_axis = FareyGeodesic {
            vertices: vec![slope(0, 1)],
        };
        assert!(matches!(
            bounded_geodesic_image_probe(&slope(0, 1), &through_axis),
            Err(FareyError::VertexDisjointFromDomain(_))
        ));
    }

    fn arb_slope() -> impl Strategy<Value = Slope> {
        (any::<i32>(), any::<i32>()).prop_filter_map("nonzero pair", |(p, q)| {
            Slope::new(p as i64 % 40, q as i64 % 40).ok()
        })
    }

    fn arb_small_sl2() -> impl Strategy<Value = MappingClass> {
        proptest::collection::vec((prop_oneof![Just(0u8), Just(1u8), Just(2u8)], -3i64..=3), 0..5)
            .prop_map(|letters| {
                let axes = [Slope::infinity(), slope(0, 1), slope(1, 1)];
                let word: Vec<(Slope, i64)> = letters
                    .into_iter()
                    .map(|(i, n)| (axes[i as usize].clone(), n))
                    .collect();
                MappingClass::from_word(&word)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn distance_symmetric_and_identity(a in arb_slope(), b in arb_slope()) {
            let (dab, _) = farey_distance(&a, &b);
            let (dba, _) = farey_distance(&b, &a);
            prop_assert_eq!(dab, dba);
            prop_assert_eq!(dab == 0, a == b);
        }

        #[test]
        fn distance_triangle(a in arb_slope(), b in arb_slope(), c in arb_slope()) {
            let (dab, _) = farey_distance(&a, &b);
            let (dbc, _) = farey_distance(&b, &c);
            let (dac, _) = farey_distance(&a, &c);
            prop_assert!(dac <= dab + dbc);
        }

        #[test]
        fn sl2_invariance(a in arb_slope(), b in arb_slope(), m in arb_small_sl2()) {
            let (d, _) = farey_distance(&a, &b);
            let (dm, _) = farey_distance(&m.apply(&a), &m.apply(&b));
            prop_assert_eq!(d, dm);
            prop_assert_eq!(a.intersection(&b), m.apply(&a).intersection(&m.apply(&b)));
        }

        #[test]
        fn twist_equivariance(axis in arb_slope(), beta in arb_slope(), n in -1_000_000i64..=1_000_000) {
            prop_assume!(axis != beta);
            let chart = TwistChart::new(&axis);
            let t = chart.twist_coordinate(&beta).unwrap();
            let image = {
                // T^n directly as I + n·(p,q)ᵀ(−q,p) to keep the case |n| ~ 10⁶ cheap
                let (p, q) = (axis.numer().clone(), axis.denom().clone());
                let n = BigInt::from(n);
                let mat = [
                    BigInt::from(1) - &n * &p * &q,
                    &n * &p * &p,
                    -(&n * &q * &q),
                    BigInt::from(1) + &n * &p * &q,
                ];
                MappingClass::from_matrix(mat).unwrap().apply(&beta)
            };
            prop_assert_eq!(chart.twist_coordinate(&image).unwrap(), t + BigInt::from(n));
        }

        #[test]
        fn geodesic_witness_valid(a in arb_slope(), b in arb_slope()) {
            let (d, g) = farey_distance(&a, &b);
            prop_assert!(g.is_valid_path());
            prop_assert_eq!(g.len_edges(), d);
            prop_assert_eq!(g.first(), &a);
            prop_assert_eq!(g.last(), &b);
        }
    }
}
