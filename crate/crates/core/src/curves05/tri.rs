//! The fixed ideal triangulation of the five-punctured sphere and the normal
//! coordinate plumbing built on it: corner counts, matching conditions, curve
//! tracing, and dual edge words.
//!
//! Punctures are numbered 0..5 as N, S, A, B, C: a bipyramid with N on top,
//! S on the bottom and the equator A, B, C. The six faces are oriented
//! coherently, so every edge is traversed in opposite directions by its two
//! faces; several sign conventions downstream rely on this.

pub const PUNCTURES: usize = 5;
pub const EDGES: usize = 9;
pub const FACES: usize = 6;

/// Edge endpoints (from, to). Order fixes the direction point indices count in.
pub const EDGE_ENDPOINTS: [(usize, usize); EDGES] = [
    (0, 2), // 0: NA
    (0, 3), // 1: NB
    (0, 4), // 2: NC
    (1, 2), // 3: SA
    (1, 3), // 4: SB
    (1, 4), // 5: SC
    (2, 3), // 6: AB
    (3, 4), // 7: BC
    (4, 2), // 8: CA
];

/// Face corner walks; all six are coherently oriented.
pub const FACE_VERTICES: [[usize; 3]; FACES] = [
    [0, 2, 3], // NAB
    [0, 3, 4], // NBC
    [0, 4, 2], // NCA
    [1, 3, 2], // SBA
    [1, 4, 3], // SCB
    [1, 2, 4], // SAC
];

/// FACE_EDGES[f][i] joins FACE_VERTICES[f][i] to FACE_VERTICES[f][(i+1)%3].
pub const FACE_EDGES: [[usize; 3]; FACES] = [
    [0, 6, 1],
    [1, 7, 2],
    [2, 8, 0],
    [4, 6, 3],
    [5, 7, 4],
    [3, 8, 5],
];

pub const EDGE_FACES: [(usize, usize); EDGES] = [
    (0, 2),
    (0, 1),
    (1, 2),
    (3, 5),
    (3, 4),
    (4, 5),
    (0, 3),
    (1, 4),
    (2, 5),
];

pub fn other_face(edge: usize, face: usize) -> usize {
    let (f, g) = EDGE_FACES[edge];
    if face == f {
        g
    } else {
        debug_assert_eq!(face, g);
        f
    }
}

/// Whether the boundary walk of `face` traverses `edge` in the edge's own
/// from→to direction.
pub fn edge_forward_in_face(face: usize, edge: usize) -> bool {
    let k = FACE_EDGES[face]
        .iter()
        .position(|&e| e == edge)
        .expect("edge belongs to face");
    EDGE_ENDPOINTS[edge].0 == FACE_VERTICES[face][k]
}

/// Number of arcs cutting the corner of `face` at vertex slot `vi`, or None
/// when the matching conditions fail there.
pub fn corner_count(w: &[u64; EDGES], face: usize, vi: usize) -> Option<u64> {
    let a = w[FACE_EDGES[face][vi]];
    let b = w[FACE_EDGES[face][(vi + 2) % 3]];
    let c = w[FACE_EDGES[face][(vi + 1) % 3]];
    let s = a + b;
    if s < c || (s - c) % 2 != 0 {
        return None;
    }
    Some((s - c) / 2)
}

pub fn matching_ok(w: &[u64; EDGES]) -> bool {
    (0..FACES).all(|f| (0..3).all(|vi| corner_count(w, f, vi).is_some()))
}

/// The weight vector of the puncture link (peripheral curve) around `v`.
pub fn link_vector(v: usize) -> [u64; EDGES] {
    let mut w = [0u64; EDGES];
    for (e, &(a, b)) in EDGE_ENDPOINTS.iter().enumerate() {
        if a == v || b == v {
            w[e] = 1;
        }
    }
    w
}

/// The round curve separating punctures {x, y} from the other three: weight 1
/// exactly on edges with one endpoint inside the pair. Valid only for pairs
/// joined by an edge, which is every pair except the two poles {N, S}.
pub fn pair_vector(x: usize, y: usize) -> [u64; EDGES] {
    assert!(x != y && x < PUNCTURES && y < PUNCTURES);
    assert!(
        (x.min(y), x.max(y)) != (0, 1),
        "the poles bound no edge; use ns_vector"
    );
    let mut w = [0u64; EDGES];
    for (e, &(a, b)) in EDGE_ENDPOINTS.iter().enumerate() {
        let ina = a == x || a == y;
        let inb = b == x || b == y;
        if ina != inb {
            w[e] = 1;
        }
    }
    w
}

/// A curve separating the poles {N, S} from the equator: both polar links
/// joined by a tube crossing the given equatorial edge twice.
pub fn ns_vector(route_edge: usize) -> [u64; EDGES] {
    assert!((6..EDGES).contains(&route_edge), "route must be equatorial");
    let mut w = [1u64; EDGES];
    w[6] = 0;
    w[7] = 0;
    w[8] = 0;
    w[route_edge] = 2;
    w
}

/// A normal-curve tracing state: about to cross face `face`, having entered
/// through point number `idx` on `edge` (points count from the edge's from
/// endpoint).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceState {
    pub face: usize,
    pub edge: usize,
    pub idx: u64,
}

/// Follows the arc through `s.face`: matches the entry point to its partner on
/// the exit edge by nesting around the corner the arc cuts.
pub fn next_state(w: &[u64; EDGES], s: TraceState) -> TraceState {
    let f = s.face;
    let (u, _v) = EDGE_ENDPOINTS[s.edge];
    let pu = FACE_VERTICES[f]
        .iter()
        .position(|&x| x == u)
        .expect("endpoint in face");
    let nu = corner_count(w, f, pu).expect("matching weights");
    // Which corner does this arc cut, and how far from it does it sit?
    let (pc, k) = if s.idx < nu {
        (pu, s.idx)
    } else {
        let pv = FACE_VERTICES[f]
            .iter()
            .position(|&x| x == EDGE_ENDPOINTS[s.edge].1)
            .expect("endpoint in face");
        (pv, w[s.edge] - 1 - s.idx)
    };
    let corner = FACE_VERTICES[f][pc];
    let e_out = FACE_EDGES[f][pc];
    let e_in = FACE_EDGES[f][(pc + 2) % 3];
    let o = if e_out == s.edge { e_in } else { e_out };
    debug_assert!(e_out == s.edge || e_in == s.edge);
    let idx = if EDGE_ENDPOINTS[o].0 == corner {
        k
    } else {
        w[o] - 1 - k
    };
    TraceState {
        face: other_face(o, f),
        edge: o,
        idx,
    }
}

/// Traces the orbit through the first weighted edge. Returns the closed state
/// cycle; the coordinates describe a single curve iff its length equals the
/// total weight.
pub fn trace_orbit(w: &[u64; EDGES]) -> Vec<TraceState> {
    let e0 = (0..EDGES).find(|&e| w[e] > 0).expect("nonzero weights");
    let start = TraceState {
        face: EDGE_FACES[e0].0,
        edge: e0,
        idx: 0,
    };
    let total: u64 = w.iter().sum();
    let mut orbit = vec![start];
    let mut s = next_state(w, start);
    while s != start {
        assert!(
            (orbit.len() as u64) <= total,
            "trace orbit exceeded total weight"
        );
        orbit.push(s);
        s = next_state(w, s);
    }
    orbit
}

/// Weight vectors of the connected components of a normal multicurve.
pub fn orbit_components(w: &[u64; EDGES]) -> Vec<[u64; EDGES]> {
    let mut seen: std::collections::HashSet<(usize, u64)> = Default::default();
    let mut out = Vec::new();
    for e in 0..EDGES {
        for i in 0..w[e] {
            if seen.contains(&(e, i)) {
                continue;
            }
            let start = TraceState {
                face: EDGE_FACES[e].0,
                edge: e,
                idx: i,
            };
            let mut cw = [0u64; EDGES];
            let mut s = start;
            loop {
                assert!(seen.insert((s.edge, s.idx)), "components are disjoint");
                cw[s.edge] += 1;
                s = next_state(w, s);
                if s == start {
                    break;
                }
            }
            out.push(cw);
        }
    }
    out
}

/// Cyclic free reduction of a dual edge word: adjacent repeats are backtracks.
pub fn reduce_cyclic_word(word: &[usize]) -> Vec<usize> {
    let mut stack: Vec<usize> = Vec::with_capacity(word.len());
    for &e in word {
        if stack.last() == Some(&e) {
            stack.pop();
        } else {
            stack.push(e);
        }
    }
    while stack.len() >= 2 && stack.first() == stack.last() {
        stack.pop();
        stack.remove(0);
    }
    stack
}

pub fn word_weights(word: &[usize]) -> [u64; EDGES] {
    let mut w = [0u64; EDGES];
    for &e in word {
        w[e] += 1;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_tables_consistent() {
        for f in 0..FACES {
            for i in 0..3 {
                let e = FACE_EDGES[f][i];
                let a = FACE_VERTICES[f][i];
                let b = FACE_VERTICES[f][(i + 1) % 3];
                let (u, v) = EDGE_ENDPOINTS[e];
                assert!((u, v) == (a, b) || (u, v) == (b, a));
                let (x, y) = EDGE_FACES[e];
                assert!(x == f || y == f);
            }
        }
        // Coherent orientation: each edge is walked forward by exactly one of
        // its two faces.
        for e in 0..EDGES {
            let (f, g) = EDGE_FACES[e];
            assert_ne!(edge_forward_in_face(f, e), edge_forward_in_face(g, e));
        }
        // Any two edges share at most one face.
        for e in 0..EDGES {
            for o in e + 1..EDGES {
                let (a, b) = EDGE_FACES[e];
                let (c, d) = EDGE_FACES[o];
                let shared = [a, b]
                    .iter()
                    .filter(|x| [c, d].contains(x))
                    .count();
                assert!(shared <= 1);
            }
        }
    }

    #[test]
    fn links_and_pairs_match() {
        for v in 0..PUNCTURES {
            assert!(matching_ok(&link_vector(v)));
        }
        for x in 0..PUNCTURES {
            for y in x + 1..PUNCTURES {
                if (x, y) == (0, 1) {
                    continue;
                }
                assert!(matching_ok(&pair_vector(x, y)));
            }
        }
        for route in 6..EDGES {
            assert!(matching_ok(&ns_vector(route)));
        }
    }

    #[test]
    fn link_orbits_close_with_full_weight() {
        for v in 0..PUNCTURES {
            let w = link_vector(v);
            let orbit = trace_orbit(&w);
            assert_eq!(orbit.len() as u64, w.iter().sum::<u64>());
        }
        for x in 0..PUNCTURES {
            for y in x + 1..PUNCTURES {
                if (x, y) == (0, 1) {
                    continue;
                }
                let w = pair_vector(x, y);
                let orbit = trace_orbit(&w);
                assert_eq!(orbit.len() as u64, w.iter().sum::<u64>());
            }
        }
        for route in 6..EDGES {
            let w = ns_vector(route);
            let orbit = trace_orbit(&w);
            assert_eq!(orbit.len() as u64, w.iter().sum::<u64>());
        }
    }

    #[test]
    fn cyclic_reduction() {
        assert_eq!(reduce_cyclic_word(&[0, 1, 1, 2]), vec![0, 2]);
        assert_eq!(reduce_cyclic_word(&[0, 1, 2, 0]), vec![1, 2]);
        assert!(reduce_cyclic_word(&[3, 4, 4, 3]).is_empty());
        assert_eq!(reduce_cyclic_word(&[0, 1, 2]), vec![0, 1, 2]);
    }
}
