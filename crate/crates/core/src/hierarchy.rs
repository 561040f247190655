//! Hierarchies on ξ=1 marking complexes: a main Farey geodesic plus one
//! annular geodesic (an integer twist interval) per main vertex, their
//! resolutions into elementary-move paths, and the large-domain projection
//! Φ̂ with its contraction measurements.

use crate::farey::{farey_distance, FareyGeodesic, Slope, TwistChart};
use crate::markings::{
    marking_distance, restrict_marking, Domain1, Marking1, MarkingDistance,
};
use crate::profile::CalibrationProfile;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HierarchyError {
    #[error("domain {0} has no footprint on the main geodesic")]
    NoFootprint(Slope),
    #[error("BFS cap {cap} exceeded")]
    CapExceeded { cap: u64 },
}

/// The transversal of `axis` with the given twist coordinate; coordinates
/// parameterize the Farey neighbors of the axis bijectively.
pub fn transversal_at(axis: &Slope, coordinate: &BigInt) -> Slope {
    let chart = TwistChart::new(axis);
    let s = Slope::new(coordinate.clone(), BigInt::from(1)).expect("integer slope");
    chart.matrix().inverse().apply(&s)
}

/// An annular geodesic: the twist interval from the initial to the terminal
/// relative coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularGeodesic1 {
    axis: Slope,
    initial: BigInt,
    terminal: BigInt,
}

impl AnnularGeodesic1 {
    pub fn axis(&self) -> &Slope {
        &self.axis
    }

    pub fn initial(&self) -> &BigInt {
        &self.initial
    }

    pub fn terminal(&self) -> &BigInt {
        &self.terminal
    }

    pub fn len(&self) -> BigInt {
        (&self.terminal - &self.initial).abs()
    }

    pub fn is_empty(&self) -> bool {
        self.initial == self.terminal
    }

    /// Clamp a coordinate to the closed interval spanned by the geodesic —
    /// the closest-point projection onto it.
    pub fn clamp(&self, coordinate: &BigInt) -> BigInt {
        let (lo, hi) = if self.initial <= self.terminal {
            (&self.initial, &self.terminal)
        } else {
            (&self.terminal, &self.initial)
        };
        coordinate.max(lo).min(hi).clone()
    }
}

/// A tight geodesic of the hierarchy: either the main geodesic with its
/// endpoint markings, or an annular twist interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TightGeodesic1 {
    Main {
        vertices: FareyGeodesic,
        initial: Marking1,
        terminal: Marking1,
    },
    Annulus(AnnularGeodesic1),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hierarchy1 {
    i_h: Marking1,
    t_h: Marking1,
    main: FareyGeodesic,
    annular: Vec<AnnularGeodesic1>,
    seeded: bool,
}

impl Hierarchy1 {
    pub fn initial_marking(&self) -> &Marking1 {
        &self.i_h
    }

    pub fn terminal_marking(&self) -> &Marking1 {
        &self.t_h
    }

    pub fn main_geodesic(&self) -> &FareyGeodesic {
        &self.main
    }

    /// The annular geodesic over the k-th main vertex.
    pub fn annular(&self, k: usize) -> &AnnularGeodesic1 {
        &self.annular[k]
    }

    pub fn annular_geodesics(&self) -> &[AnnularGeodesic1] {
        &self.annular
    }

    /// All geodesics of the hierarchy; the support of each non-main geodesic
    /// is an annulus about a main vertex, and supports are unique.
    pub fn geodesics(&self) -> Vec<TightGeodesic1> {
        let mut out = vec![TightGeodesic1::Main {
            vertices: self.main.clone(),
            initial: self.i_h.clone(),
            terminal: self.t_h.clone(),
        }];
        out.extend(self.annular.iter().cloned().map(TightGeodesic1::Annulus));
        out
    }

    /// Footprint of the annulus about `y` on the main geodesic: its vertex
    /// index if `y` is a main vertex (a geodesic never repeats a vertex).
    pub fn footprint(&self, y: &Slope) -> Option<usize> {
        self.main.vertices().iter().position(|v| v == y)
    }
}

pub fn build_hierarchy(i: &Marking1, t: &Marking1) -> Hierarchy1 {
    build_hierarchy_with_seed(i, t, None)
}

/// Builds the hierarchy from I to T.  `seed` overrides the initial vertex of
/// the main geodesic (which otherwise is base(I)) for experiments that need
/// to start the main geodesic on a prescribed curve.
pub fn build_hierarchy_with_seed(
    i: &Marking1,
    t: &Marking1,
    seed: Option<&Slope>,
) -> Hierarchy1 {
    let start = seed.unwrap_or_else(|| i.base());
    let (_, main) = farey_distance(start, t.base());
    let vs: Vec<Slope> = main.vertices().to_vec();
    let n = vs.len();
    let mut annular = Vec::with_capacity(n);
    for (k, v) in vs.iter().enumerate() {
        let chart = TwistChart::new(v);
        let initial = if k == 0 {
            restrict_marking(i, v).expect("restriction always defined on xi=1")
        } else {
            chart.twist_coordinate(&vs[k - 1]).expect("adjacent vertex crosses")
        };
        let terminal = if k == n - 1 {
            restrict_marking(t, v).expect("restriction always defined on xi=1")
        } else {
            chart.twist_coordinate(&vs[k + 1]).expect("adjacent vertex crosses")
        };
        annular.push(AnnularGeodesic1 {
            axis: v.clone(),
            initial,
            terminal,
        });
    }
    Hierarchy1 {
        i_h: i.clone(),
        t_h: t.clone(),
        main,
        annular,
        seeded: seed.is_some(),
    }
}

/// A resolution: markings separated by single elementary moves, sweeping the
/// hierarchy's slices in order.  `provenance[j]` is the main-vertex index
/// whose domain the j-th marking belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedPath {
    markings: Vec<Marking1>,
    provenance: Vec<usize>,
}

impl ResolvedPath {
    pub fn markings(&self) -> &[Marking1] {
        &self.markings
    }

    pub fn provenance(&self) -> &[usize] {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.markings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markings.is_empty()
    }

    pub fn len_moves(&self) -> usize {
        self.markings.len() - 1
    }

    /// Every consecutive pair differs by exactly one elementary move.
    pub fn is_valid(&self) -> bool {
        self.markings.windows(2).all(|w| w[0].elementary_moves().contains(&w[1]))
    }
}

/// Resolves the hierarchy: within each main vertex's annulus, Twist moves
/// advance the transversal's coordinate monotonically to the terminal value,
/// at which point the transversal *is* the next main vertex and a Flip
/// transitions to it.
pub fn resolve_path(h: &Hierarchy1) -> ResolvedPath {
    let vs = h.main.vertices();
    let mut cur = if h.i_h.base() == &vs[0] {
        h.i_h.clone()
    } else {
        // seeded hierarchy: start on the seed vertex at the initial coordinate
        Marking1::new(
            h.i_h.surface(),
            vs[0].clone(),
            transversal_at(&vs[0], &h.annular[0].initial),
        )
        .expect("transversal_at produces an adjacent slope")
    };
    let mut markings = vec![cur.clone()];
    let mut provenance = vec![0usize];
    for k in 0..vs.len() {
        let chart = TwistChart::new(&vs[k]);
        let mut coord = chart
            .twist_coordinate(cur.transversal())
            .expect("transversal crosses its base");
        let target = &h.annular[k].terminal;
        let step: i64 = if *target >= coord { 1 } else { -1 };
        while &coord != target {
            cur = cur.retwist(step);
            coord += step;
            markings.push(cur.clone());
            provenance.push(k);
        }
        if k + 1 < vs.len() {
            assert_eq!(
                cur.transversal(),
                &vs[k + 1],
                "terminal coordinate must land on the next main vertex"
            );
            cur = cur.flip();
            markings.push(cur.clone());
            provenance.push(k + 1);
        }
    }
    if !h.seeded {
        assert_eq!(cur, h.t_h, "resolution must end at the terminal marking");
    }
    ResolvedPath {
        markings,
        provenance,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeOrder {
    Before,
    After,
    Unordered,
}

/// Time order of two annular domains via their footprints on the main
/// geodesic.
pub fn time_order(h: &Hierarchy1, y: &Slope, z: &Slope) -> Result<TimeOrder, HierarchyError> {
    let iy = h.footprint(y).ok_or_else(|| HierarchyError::NoFootprint(y.clone()))?;
    let iz = h.footprint(z).ok_or_else(|| HierarchyError::NoFootprint(z.clone()))?;
    Ok(match iy.cmp(&iz) {
        std::cmp::Ordering::Less => TimeOrder::Before,
        std::cmp::Ordering::Greater => TimeOrder::After,
        std::cmp::Ordering::Equal => TimeOrder::Unordered,
    })
}

/// Large-domain bookkeeping for a probe marking μ against a hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeDomainReport {
    /// Domains with endpoint projection distance above the large threshold,
    /// with that distance.
    pub g: Vec<(Domain1, BigInt)>,
    /// Large domains whose projection of μ is close to the terminal side.
    pub l: Vec<Domain1>,
    /// Large domains whose projection of μ is close to the initial side.
    pub r: Vec<Domain1>,
    /// Indices of main-geodesic vertices closest to base(μ).
    pub lambda: Vec<usize>,
    /// The projection image Φ̂(μ).
    pub phi_hat: Vec<Marking1>,
    /// Set when the in-between case had to treat a missing L or R end as an
    /// infinite one.
    pub unbounded_end: bool,
}

fn domain_endpoint_distance(h: &Hierarchy1, k: usize) -> BigInt {
    let v = h.annular[k].axis();
    let a = restrict_marking(&h.i_h, v).expect("defined on xi=1");
    let b = restrict_marking(&h.t_h, v).expect("defined on xi=1");
    (a - b).abs()
}

fn compute_report(
    h: &Hierarchy1,
    mu: &Marking1,
    profile: &CalibrationProfile,
    path: &ResolvedPath,
) -> LargeDomainReport {
    let vs = h.main.vertices();
    let n = vs.len();
    let t_large = BigInt::from(profile.threshold_large());
    let t_lr = BigInt::from(profile.threshold_lr());

    // Λ: main vertices closest to base(μ) in the Farey graph
    let dists: Vec<u64> = vs.iter().map(|v| farey_distance(mu.base(), v).0).collect();
    let best = *dists.iter().min().expect("geodesic nonempty");
    let lambda: Vec<usize> = (0..n).filter(|&k| dists[k] == best).collect();

    let mut g = Vec::new();
    let mut l = Vec::new();
    let mut r = Vec::new();

    let d_s = BigInt::from(h.main.len_edges());
    if d_s > t_large {
        g.push((Domain1::WholeSurface, d_s));
        let to_t = BigInt::from((n as u64 - 1) - *lambda.iter().max().unwrap() as u64);
        let to_i = BigInt::from(*lambda.iter().min().unwrap() as u64);
        if to_t < t_lr {
            l.push(Domain1::WholeSurface);
        } else if to_i < t_lr {
            r.push(Domain1::WholeSurface);
        }
    }

    for k in 0..n {
        let d = domain_endpoint_distance(h, k);
        if d > t_large {
            let dom = Domain1::Annulus(vs[k].clone());
            g.push((dom.clone(), d));
            let ann = &h.annular[k];
            let p = ann.clamp(&restrict_marking(mu, ann.axis()).expect("defined on xi=1"));
            let near_t = (&p - ann.terminal()).abs() < t_lr;
            let near_i = (&p - ann.initial()).abs() < t_lr;
            if near_t && !near_i {
                l.push(dom);
            } else if near_i && !near_t {
                r.push(dom);
            } else if near_t && near_i {
                // degenerate short large domain; terminal side wins
                l.push(dom);
            }
        }
    }

    let (phi_hat, unbounded_end) = compute_phi_hat(h, mu, path, &g, &l, &r, &lambda);
    LargeDomainReport {
        g,
        l,
        r,
        lambda,
        phi_hat,
        unbounded_end,
    }
}

fn nearest_slice_markings(h: &Hierarchy1, mu: &Marking1, lambda: &[usize]) -> Vec<Marking1> {
    let mut out = Vec::new();
    for &k in lambda {
        let ann = &h.annular[k];
        let p = ann.clamp(&restrict_marking(mu, ann.axis()).expect("defined on xi=1"));
        let m = Marking1::new(mu.surface(), ann.axis().clone(), transversal_at(ann.axis(), &p))
            .expect("transversal_at produces an adjacent slope");
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn compute_phi_hat(
    h: &Hierarchy1,
    mu: &Marking1,
    path: &ResolvedPath,
    g: &[(Domain1, BigInt)],
    l: &[Domain1],
    r: &[Domain1],
    lambda: &[usize],
) -> (Vec<Marking1>, bool) {
    // the identity on markings of the resolved hierarchy path
    if path.markings().contains(mu) {
        return (vec![mu.clone()], false);
    }
    let unresolved: Vec<&Domain1> = g
        .iter()
        .map(|(d, _)| d)
        .filter(|d| !l.contains(d) && !r.contains(d))
        .collect();
    // single surviving large domain
    if unresolved.len() == 1 {
        match unresolved[0] {
            Domain1::Annulus(axis) => {
                let k = h.footprint(axis).expect("large annuli are main vertices");
                let ann = &h.annular[k];
                let p = ann.clamp(&restrict_marking(mu, axis).expect("defined on xi=1"));
                let m = Marking1::new(mu.surface(), axis.clone(), transversal_at(axis, &p))
                    .expect("transversal_at produces an adjacent slope");
                return (vec![m], false);
            }
            Domain1::WholeSurface => {
                return (nearest_slice_markings(h, mu, lambda), false);
            }
        }
    }
    // all large domains resolved into L and R (or none exist): the image sits
    // between the rightmost L domain and the leftmost R domain
    let il = l
        .iter()
        .filter_map(|d| match d {
            Domain1::Annulus(a) => h.footprint(a),
            Domain1::WholeSurface => None,
        })
        .max();
    let jr = r
        .iter()
        .filter_map(|d| match d {
            Domain1::Annulus(a) => h.footprint(a),
            Domain1::WholeSurface => None,
        })
        .min();
    if il.is_none() && jr.is_none() {
        return (nearest_slice_markings(h, mu, lambda), false);
    }
    let prov = path.provenance();
    let start = il
        .map(|k| prov.iter().rposition(|&p| p == k).expect("slice exists"))
        .unwrap_or(0);
    let end = jr
        .map(|k| prov.iter().position(|&p| p == k).expect("slice exists"))
        .unwrap_or(path.len() - 1);
    let (start, end) = if start <= end { (start, end) } else { (end, start) };
    let unbounded = il.is_none() != jr.is_none();
    (path.markings()[start..=end].to_vec(), unbounded)
}

pub fn large_domain_report(
    h: &Hierarchy1,
    mu: &Marking1,
    profile: &CalibrationProfile,
) -> LargeDomainReport {
    let path = resolve_path(h);
    compute_report(h, mu, profile, &path)
}

pub fn phi_hat(h: &Hierarchy1, mu: &Marking1, profile: &CalibrationProfile) -> Vec<Marking1> {
    large_domain_report(h, mu, profile).phi_hat
}

/// One contraction measurement: r = d(μ, Φ̂(μ)), the probe distance
/// d(μ, ν), and diam(Φ̂(μ) ∪ Φ̂(ν)).  Pure measurement; assertions live in
/// the lab's contraction scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractionRecord {
    pub r: u64,
    pub d_mu_nu: u64,
    pub diam_phi: u64,
}

fn exact_or_cap(d: MarkingDistance, cap: u64) -> Result<u64, HierarchyError> {
    d.exact().ok_or(HierarchyError::CapExceeded { cap })
}

pub fn contraction_probe(
    h: &Hierarchy1,
    mu: &Marking1,
    nu: &Marking1,
    profile: &CalibrationProfile,
    cap: u64,
) -> Result<ContractionRecord, HierarchyError> {
    let pm = phi_hat(h, mu, profile);
    let pn = phi_hat(h, nu, profile);
    let mut r = u64::MAX;
    for f in &pm {
        r = r.min(exact_or_cap(marking_distance(mu, f, cap), cap)?);
    }
    let d_mu_nu = exact_or_cap(marking_distance(mu, nu, cap), cap)?;
    let mut union: Vec<&Marking1> = pm.iter().collect();
    for f in &pn {
        if !union.contains(&f) {
            union.push(f);
        }
    }
    let mut diam_phi = 0;
    for i in 0..union.len() {
        for j in (i + 1)..union.len() {
            diam_phi =
                diam_phi.max(exact_or_cap(marking_distance(union[i], union[j], cap), cap)?);
        }
    }
    Ok(ContractionRecord {
        r,
        d_mu_nu,
        diam_phi,
    })
}

/// Audit helper: every annulus in `annuli` whose endpoint-restriction gap
/// exceeds `m2` must be a main-geodesic vertex (large links).
pub fn large_links_violations(h: &Hierarchy1, annuli: &[Slope], m2: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for a in annuli {
        let d = {
            let x = restrict_marking(&h.i_h, a).expect("defined on xi=1");
            let y = restrict_marking(&h.t_h, a).expect("defined on xi=1");
            (x - y).abs()
        };
        if d.to_i64().map(|d| d > m2).unwrap_or(true) && h.footprint(a).is_none() {
            out.push(a.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::{slope, MappingClass};
    use crate::markings::{marking_ball, support_annuli, Surface1};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn origin() -> Marking1 {
        Marking1::new(Surface1::TorusOnePuncture, slope(0, 1), slope(1, 0)).unwrap()
    }

    fn random_marking(rng: &mut ChaCha8Rng, word_len: usize) -> Marking1 {
        let mut m = origin();
        for _ in 0..word_len {
            let moves = m.elementary_moves();
            m = moves[rng.gen_range(0..moves.len())].clone();
        }
        m
    }

    #[test]
    fn trivial_hierarchy() {
        let i = origin();
        let h = build_hierarchy(&i, &i);
        assert_eq!(h.main_geodesic().len_edges(), 0);
        assert_eq!(h.annular_geodesics().len(), 1);
        assert!(h.annular(0).is_empty());
        let p = resolve_path(&h);
        assert_eq!(p.markings(), &[i]);
    }

    #[test]
    fn pure_twist_hierarchy() {
        let i = origin();
        let t = i.retwist(7);
        let h = build_hierarchy(&i, &t);
        assert_eq!(h.main_geodesic().len_edges(), 0);
        assert_eq!(h.annular(0).len(), BigInt::from(7));
        let p = resolve_path(&h);
        assert_eq!(p.len_moves(), 7);
        assert!(p.is_valid());
        assert_eq!(p.markings().last().unwrap(), &t);
    }

    #[test]
    fn transversal_at_round_trips() {
        let axis = slope(3, 5);
        let chart = TwistChart::new(&axis);
        for k in [-6i64, -1, 0, 1, 2, 40] {
            let t = transversal_at(&axis, &BigInt::from(k));
            assert!(t.adjacent(&axis));
            assert_eq!(chart.twist_coordinate(&t).unwrap(), BigInt::from(k));
        }
    }

    #[test]
    fn generic_hierarchies_resolve_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let i = random_marking(&mut rng, 6);
            let t = random_marking(&mut rng, 6);
            let h = build_hierarchy(&i, &t);
            // supports are unique: geodesic vertices are distinct
            let vs = h.main_geodesic().vertices();
            for a in 0..vs.len() {
                for b in (a + 1)..vs.len() {
                    assert_ne!(vs[a], vs[b]);
                }
            }
            // relative markings follow the neighbor convention
            for (k, ann) in h.annular_geodesics().iter().enumerate() {
                let chart = TwistChart::new(ann.axis());
                if k > 0 {
                    assert_eq!(
                        ann.initial(),
                        &chart.twist_coordinate(&vs[k - 1]).unwrap()
                    );
                }
                if k + 1 < vs.len() {
                    assert_eq!(
                        ann.terminal(),
                        &chart.twist_coordinate(&vs[k + 1]).unwrap()
                    );
                }
            }
            let p = resolve_path(&h);
            assert!(p.is_valid());
            assert_eq!(p.markings().first().unwrap(), &i);
            assert_eq!(p.markings().last().unwrap(), &t);
            // a valid move path is an upper bound for the BFS metric
            let d = marking_distance(&i, &t, 20).exact().unwrap();
            assert!(p.len_moves() as u64 >= d);
        }
    }

    #[test]
    fn seeded_hierarchy_overrides_initial_vertex() {
        let i = origin();
        let t = random_marking(&mut ChaCha8Rng::seed_from_u64(3), 8);
        let seed = slope(1, 1);
        let h = build_hierarchy_with_seed(&i, &t, Some(&seed));
        assert_eq!(h.main_geodesic().first(), &seed);
        assert_eq!(h.main_geodesic().last(), t.base());
        let p = resolve_path(&h);
        assert!(p.is_valid());
        assert_eq!(p.markings().last().unwrap(), &t);
    }

    #[test]
    fn footprints_and_time_order() {
        let i = origin();
        let t = Marking1::new(Surface1::TorusOnePuncture, slope(5, 2), slope(2, 1)).unwrap();
        let h = build_hierarchy(&i, &t);
        let vs = h.main_geodesic().vertices().to_vec();
        assert!(vs.len() >= 3);
        assert_eq!(h.footprint(&vs[1]), Some(1));
        assert_eq!(h.footprint(&slope(999, 998)), None);
        assert_eq!(time_order(&h, &vs[0], &vs[2]).unwrap(), TimeOrder::Before);
        assert_eq!(time_order(&h, &vs[2], &vs[0]).unwrap(), TimeOrder::After);
        assert_eq!(time_order(&h, &vs[1], &vs[1]).unwrap(), TimeOrder::Unordered);
        assert_eq!(
            time_order(&h, &slope(999, 998), &vs[0]),
            Err(HierarchyError::NoFootprint(slope(999, 998)))
        );
    }

    #[test]
    fn large_links_hold_on_random_hierarchies() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let i = random_marking(&mut rng, 8);
            let t = random_marking(&mut rng, 8);
            let h = build_hierarchy(&i, &t);
            let mut annuli = support_annuli(&[i.clone(), t.clone()]);
            for v in h.main_geodesic().vertices() {
                if !annuli.contains(v) {
                    annuli.push(v.clone());
                }
            }
            assert!(large_links_violations(&h, &annuli, 10).is_empty());
        }
    }

    #[test]
    fn report_invariants_on_probes() {
        let profile = CalibrationProfile::default();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for round in 0..25 {
            let i = random_marking(&mut rng, 5);
            // force a couple of genuinely large annular domains
            let mid = random_marking(&mut rng, 3);
            let t = {
                let big: i64 = 150 + rng.gen_range(0..100);
                let w = vec![
                    (mid.base().clone(), big),
                    (mid.transversal().clone(), -big),
                ];
                let phi = MappingClass::from_word(&w);
                let pairs = [
                    (slope(0, 1), slope(1, 0)),
                    (slope(1, 0), slope(0, 1)),
                    (slope(1, 1), slope(2, 1)),
                ];
                let (b, tr) = &pairs[rng.gen_range(0..pairs.len())];
                Marking1::new(i.surface(), phi.apply(b), phi.apply(tr)).unwrap()
            };
            let h = build_hierarchy(&i, &t);
            let mu = random_marking(&mut rng, 6);
            let rep = large_domain_report(&h, &mu, &profile);
            for d in &rep.l {
                assert!(!rep.r.contains(d), "L ∩ R nonempty in round {round}");
            }
            let unresolved = rep
                .g
                .iter()
                .filter(|(d, _)| !rep.l.contains(d) && !rep.r.contains(d))
                .count();
            assert!(unresolved <= 1, "round {round}: {unresolved} unresolved");
            assert!(!rep.phi_hat.is_empty());
            assert!(!rep.lambda.is_empty());
        }
    }

    #[test]
    fn phi_hat_is_identity_on_path() {
        let profile = CalibrationProfile::default();
        let i = origin();
        let t = random_marking(&mut ChaCha8Rng::seed_from_u64(5), 8);
        let h = build_hierarchy(&i, &t);
        let p = resolve_path(&h);
        for m in p.markings() {
            assert_eq!(phi_hat(&h, m, &profile), vec![m.clone()]);
        }
    }

    #[test]
    fn contraction_probe_smoke() {
        let profile = CalibrationProfile::default();
        let i = origin();
        let t = i.retwist(9);
        let h = build_hierarchy(&i, &t);
        let ball = marking_ball(&origin(), 2).unwrap();
        for mu in ball.vertices() {
            let rec = contraction_probe(&h, mu, mu, &profile, 30).unwrap();
            assert_eq!(rec.d_mu_nu, 0);
        }
    }
}
