//! Overlay arrangements of two normal curves: both curves are drawn in the
//! fixed triangulation as chord diagrams, crossings are read off from boundary
//! interleaving face by face, and bigons are removed by rerouting the first
//! curve parallel to the second until the configuration is minimal. The second
//! curve is never modified, so its points keep their normal-coordinate order;
//! region bookkeeping for subsurface sides relies on that.

use super::tri::*;

#[derive(Debug, Clone)]
pub struct Arrangement {
    pt_edge: Vec<usize>,
    pt_curve: Vec<u8>,
    /// Cyclic point sequences; path[1] is the untouched reference curve.
    path: [Vec<usize>; 2],
    /// link_face[c][i] is the face holding the chord path[c][i] -> path[c][i+1].
    link_face: [Vec<usize>; 2],
    /// Point ids in order along each edge (from the edge's from endpoint).
    edge_pts: [Vec<usize>; EDGES],
}

#[derive(Debug, Clone, Copy)]
pub struct Crossing {
    pub a_link: usize,
    pub b_link: usize,
    pub face: usize,
    /// Whether the a-chord's exit point lies in the open arc walked positively
    /// from the b-chord's start to its end. Encodes the crossing side in the
    /// coherent face orientation.
    pub a_exit_plus: bool,
}

#[derive(Debug, Clone)]
pub struct CrossingSet {
    pub list: Vec<Crossing>,
    /// Crossing indices in traversal order along curve a.
    pub along_a: Vec<usize>,
    /// Positions in traversal order along each curve, indexed by crossing.
    pub pos_a: Vec<usize>,
    pub pos_b: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct Bigon {
    /// Index into along_a of the first corner; the second is the next one.
    pub ai: usize,
    /// Direction of travel along curve b from the first corner to the second.
    pub forward_b: bool,
}

fn in_open_arc(i: usize, s: usize, t: usize, n: usize) -> bool {
    let di = (i + n - s) % n;
    let dt = (t + n - s) % n;
    di > 0 && di < dt
}

impl Arrangement {
    pub fn from_curves(wa: &[u64; EDGES], wb: &[u64; EDGES]) -> Arrangement {
        let oa = trace_orbit(wa);
        let ob = trace_orbit(wb);
        debug_assert_eq!(oa.len() as u64, wa.iter().sum::<u64>());
        debug_assert_eq!(ob.len() as u64, wb.iter().sum::<u64>());
        let na = oa.len();
        let mut pt_edge = Vec::with_capacity(na + ob.len());
        let mut pt_curve = Vec::with_capacity(na + ob.len());
        let mut path = [Vec::new(), Vec::new()];
        let mut link_face = [Vec::new(), Vec::new()];
        let mut edge_pts: [Vec<usize>; EDGES] = Default::default();
        let mut per_edge: [Vec<(u64, usize)>; EDGES] = Default::default();
        for (c, orbit) in [&oa, &ob].into_iter().enumerate() {
            for s in orbit {
                let id = pt_edge.len();
                pt_edge.push(s.edge);
                pt_curve.push(c as u8);
                path[c].push(id);
                link_face[c].push(s.face);
                per_edge[s.edge].push((s.idx, id));
            }
            // Curve 0's points take the low positions on every edge; curve 1's
            // block follows, preserving each curve's own normal order.
            if c == 0 {
                for e in 0..EDGES {
                    per_edge[e].sort_unstable();
                    edge_pts[e].extend(per_edge[e].iter().map(|&(_, id)| id));
                    per_edge[e].clear();
                }
            }
        }
        for e in 0..EDGES {
            per_edge[e].sort_unstable();
            edge_pts[e].extend(per_edge[e].iter().map(|&(_, id)| id));
        }
        Arrangement {
            pt_edge,
            pt_curve,
            path,
            link_face,
            edge_pts,
        }
    }

    pub fn path(&self, c: usize) -> &[usize] {
        &self.path[c]
    }

    pub fn point_edge(&self, id: usize) -> usize {
        self.pt_edge[id]
    }

    fn link_ends(&self, c: usize, l: usize) -> (usize, usize) {
        let n = self.path[c].len();
        (self.path[c][l], self.path[c][(l + 1) % n])
    }

    /// Boundary point cycle of a face, walked in the face's own orientation.
    fn boundary(&self, f: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..3 {
            let e = FACE_EDGES[f][i];
            if edge_forward_in_face(f, e) {
                out.extend(self.edge_pts[e].iter().copied());
            } else {
                out.extend(self.edge_pts[e].iter().rev().copied());
            }
        }
        out
    }

    pub fn compute_crossings(&self) -> CrossingSet {
        let mut face_links: [Vec<(usize, usize)>; FACES] = Default::default();
        for c in 0..2 {
            for (l, &f) in self.link_face[c].iter().enumerate() {
                face_links[f].push((c, l));
            }
        }
        let mut pos = vec![usize::MAX; self.pt_edge.len()];
        let mut list: Vec<Crossing> = Vec::new();
        // Per-link crossing buckets keyed by offset along the chord.
        let mut bucket_a: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.path[0].len()];
        let mut bucket_b: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.path[1].len()];
        for f in 0..FACES {
            let links = &face_links[f];
            if links.iter().all(|&(c, _)| c == 0) || links.iter().all(|&(c, _)| c == 1) {
                continue;
            }
            let bd = self.boundary(f);
            let n = bd.len();
            for (i, &p) in bd.iter().enumerate() {
                pos[p] = i;
            }
            for &(ca, la) in links.iter().filter(|&&(c, _)| c == 0) {
                debug_assert_eq!(ca, 0);
                let (pa, pa2) = self.link_ends(0, la);
                let (xa, ya) = (pos[pa], pos[pa2]);
                for &(_, lb) in links.iter().filter(|&&(c, _)| c == 1) {
                    let (qb, qb2) = self.link_ends(1, lb);
                    let (s, t) = (pos[qb], pos[qb2]);
                    let start_in = in_open_arc(xa, s, t, n);
                    let exit_in = in_open_arc(ya, s, t, n);
                    if start_in == exit_in {
                        continue;
                    }
                    let id = list.len();
                    list.push(Crossing {
                        a_link: la,
                        b_link: lb,
                        face: f,
                        a_exit_plus: exit_in,
                    });
                    // Order along each chord: walk the positive arc from the
                    // chord's start; the other chord's endpoint inside that arc
                    // marks where the crossing sits.
                    let b_end_in = if in_open_arc(s, xa, ya, n) { s } else { t };
                    bucket_a[la].push(((b_end_in + n - xa) % n, id));
                    let a_end_in = if start_in { xa } else { ya };
                    bucket_b[lb].push(((a_end_in + n - s) % n, id));
                }
            }
        }
        let mut along_a = Vec::with_capacity(list.len());
        for b in bucket_a.iter_mut() {
            b.sort_unstable();
            along_a.extend(b.iter().map(|&(_, id)| id));
        }
        let mut along_b = Vec::with_capacity(list.len());
        for b in bucket_b.iter_mut() {
            b.sort_unstable();
            along_b.extend(b.iter().map(|&(_, id)| id));
        }
        let mut pos_a = vec![0; list.len()];
        let mut pos_b = vec![0; list.len()];
        for (i, &x) in along_a.iter().enumerate() {
            pos_a[x] = i;
        }
        for (i, &x) in along_b.iter().enumerate() {
            pos_b[x] = i;
        }
        CrossingSet {
            list,
            along_a,
            pos_a,
            pos_b,
        }
    }

    /// Path-position ranges of the points strictly between two crossings.
    pub(crate) fn a_interior(&self, cs: &CrossingSet, x: usize, y: usize) -> Vec<usize> {
        let lx = cs.list[x].a_link;
        let ly = cs.list[y].a_link;
        let m = self.path[0].len();
        if lx == ly && cs.pos_a[y] == cs.pos_a[x] + 1 {
            return Vec::new();
        }
        let count = (ly + m - lx - 1) % m + 1;
        (0..count).map(|i| (lx + 1 + i) % m).collect()
    }

    pub(crate) fn b_interior(&self, cs: &CrossingSet, x: usize, y: usize, forward: bool) -> Vec<usize> {
        let lx = cs.list[x].b_link;
        let ly = cs.list[y].b_link;
        let m = self.path[1].len();
        if forward {
            if lx == ly && cs.pos_b[y] == cs.pos_b[x] + 1 {
                return Vec::new();
            }
            let count = (ly + m - lx - 1) % m + 1;
            (0..count).map(|i| (lx + 1 + i) % m).collect()
        } else {
            if lx == ly && cs.pos_b[x] == cs.pos_b[y] + 1 {
                return Vec::new();
            }
            let count = (lx + m - ly - 1) % m + 1;
            (0..count).map(|i| (lx + m - i) % m).collect()
        }
    }

    fn find_bigon(&self, cs: &CrossingSet) -> Option<Bigon> {
        let n = cs.list.len();
        if n < 2 {
            return None;
        }
        for ai in 0..n {
            let x = cs.along_a[ai];
            let y = cs.along_a[(ai + 1) % n];
            if x == y {
                continue;
            }
            let bx = cs.pos_b[x];
            let by = cs.pos_b[y];
            let mut dirs: Vec<bool> = Vec::with_capacity(2);
            if (bx + 1) % n == by {
                dirs.push(true);
            }
            if (by + 1) % n == bx {
                dirs.push(false);
            }
            for forward in dirs {
                let mut word: Vec<usize> = self
                    .a_interior(cs, x, y)
                    .iter()
                    .map(|&i| self.pt_edge[self.path[0][i]])
                    .collect();
                let b_edges: Vec<usize> = self
                    .b_interior(cs, x, y, forward)
                    .iter()
                    .map(|&i| self.pt_edge[self.path[1][i]])
                    .collect();
                word.extend(b_edges.iter().rev());
                if reduce_cyclic_word(&word).is_empty() {
                    return Some(Bigon { ai, forward_b: forward });
                }
            }
        }
        None
    }

    /// Index of `p` within the boundary cycle `bd` (points are unique).
    fn bd_pos(bd: &[usize], p: usize) -> usize {
        bd.iter().position(|&q| q == p).expect("point on boundary")
    }

    /// Inserts a fresh curve-0 point on `edge` immediately before or after
    /// `buddy` in the edge order, and returns its id.
    fn insert_parallel(&mut self, edge: usize, buddy: usize, after: bool) -> usize {
        let id = self.pt_edge.len();
        self.pt_edge.push(edge);
        self.pt_curve.push(0);
        let at = self.edge_pts[edge]
            .iter()
            .position(|&q| q == buddy)
            .expect("buddy on edge");
        self.edge_pts[edge].insert(if after { at + 1 } else { at }, id);
        id
    }

    fn remove_bigon(&mut self, cs: &CrossingSet, big: Bigon) {
        let n = cs.list.len();
        let x = cs.along_a[big.ai];
        let y = cs.along_a[(big.ai + 1) % n];
        let cx = cs.list[x];
        let cy = cs.list[y];
        let la_len = self.path[0].len();
        let lb_len = self.path[1].len();
        let d_positions = self.a_interior(cs, x, y);
        let b_positions = self.b_interior(cs, x, y, big.forward_b);
        // Both corners on one a-chord with the removed arc wrapping the whole
        // curve: nothing of the old path survives and the reroute closes up
        // through the chord's own face.
        let keep_none = cx.a_link == cy.a_link && cs.pos_a[y] != cs.pos_a[x] + 1;
        let p_alpha = self.path[0][cx.a_link];
        let p_eps = self.path[0][(cy.a_link + 1) % la_len];

        let mut new_pts: Vec<usize> = Vec::with_capacity(b_positions.len());
        if b_positions.is_empty() {
            assert_eq!(cx.face, cy.face, "empty bigon corners share a face");
        } else {
            // Place the first parallel point on the p_alpha side of the
            // b-chord at the x corner, then propagate the side chordwise.
            let q1 = self.path[1][b_positions[0]];
            let want_plus = !cx.a_exit_plus;
            let f = cx.face;
            let before_in_walk = if big.forward_b { want_plus } else { !want_plus };
            let after_on_edge = before_in_walk != edge_forward_in_face(f, self.pt_edge[q1]);
            let n1 = self.insert_parallel(self.pt_edge[q1], q1, after_on_edge);
            new_pts.push(n1);
            for t in 1..b_positions.len() {
                let q_prev = self.path[1][b_positions[t - 1]];
                let q_next = self.path[1][b_positions[t]];
                let link = if big.forward_b {
                    b_positions[t - 1]
                } else {
                    b_positions[t]
                };
                let g = self.link_face[1][link];
                let bd = self.boundary(g);
                let m = bd.len();
                let (u, v) = (Self::bd_pos(&bd, q_prev), Self::bd_pos(&bd, q_next));
                let prev_n = *new_pts.last().expect("previous parallel point");
                let inside = in_open_arc(Self::bd_pos(&bd, prev_n), u, v, m);
                let before_in_walk = inside;
                let after_on_edge =
                    before_in_walk != edge_forward_in_face(g, self.pt_edge[q_next]);
                let nt = self.insert_parallel(self.pt_edge[q_next], q_next, after_on_edge);
                new_pts.push(nt);
            }
            // The propagated side must agree with the exit side at the y
            // corner, or the reroute would cross the reference curve.
            let bd = self.boundary(cy.face);
            let m = bd.len();
            let qs = self.path[1][cy.b_link];
            let qe = self.path[1][(cy.b_link + 1) % lb_len];
            let last_n = *new_pts.last().expect("parallel points");
            let got_plus = in_open_arc(
                Self::bd_pos(&bd, last_n),
                Self::bd_pos(&bd, qs),
                Self::bd_pos(&bd, qe),
                m,
            );
            assert_eq!(got_plus, cy.a_exit_plus, "parallel reroute side mismatch");
        }

        // Drop the old segment from the edge orders.
        let dead: std::collections::HashSet<usize> = d_positions
            .iter()
            .map(|&i| self.path[0][i])
            .collect();
        for e in 0..EDGES {
            self.edge_pts[e].retain(|p| !dead.contains(p));
        }

        if keep_none {
            assert_eq!(cx.face, cy.face, "wrap bigon corners share the chord face");
            assert!(!new_pts.is_empty(), "wrap bigon reroute stays essential");
            let mut new_faces = Vec::with_capacity(new_pts.len());
            for t in 0..new_pts.len() - 1 {
                let link = if big.forward_b {
                    b_positions[t]
                } else {
                    b_positions[t + 1]
                };
                new_faces.push(self.link_face[1][link]);
            }
            // The closing chord runs through the face of the old a-chord.
            new_faces.push(cx.face);
            self.path[0] = new_pts;
            self.link_face[0] = new_faces;
            return;
        }

        // Rebuild curve 0: keep [p_eps .. p_alpha] with its link faces, then
        // run the parallel points.
        let start = (cy.a_link + 1) % la_len;
        let mut new_path = Vec::with_capacity(la_len + new_pts.len());
        let mut new_faces = Vec::with_capacity(la_len + new_pts.len());
        let mut i = start;
        loop {
            new_path.push(self.path[0][i]);
            if i == cx.a_link {
                break;
            }
            new_faces.push(self.link_face[0][i]);
            i = (i + 1) % la_len;
        }
        debug_assert_eq!(*new_path.first().unwrap(), p_eps);
        debug_assert_eq!(*new_path.last().unwrap(), p_alpha);
        new_faces.push(cx.face);
        for (t, &np) in new_pts.iter().enumerate() {
            new_path.push(np);
            if t + 1 < new_pts.len() {
                let link = if big.forward_b {
                    b_positions[t]
                } else {
                    b_positions[t + 1]
                };
                new_faces.push(self.link_face[1][link]);
            }
        }
        if new_pts.is_empty() {
            // The single replacement chord closes the cycle inside cx.face,
            // which already sits at the end of new_faces.
        } else {
            new_faces.push(cy.face);
        }
        debug_assert_eq!(new_faces.len(), new_path.len());
        self.path[0] = new_path;
        self.link_face[0] = new_faces;
    }

    /// Checks the structural invariants tying paths, link faces and edge
    /// orders together; used after mutations in debug builds.
    #[cfg(debug_assertions)]
    fn validate(&self) {
        for c in 0..2 {
            let m = self.path[c].len();
            assert_eq!(self.link_face[c].len(), m);
            for l in 0..m {
                let f = self.link_face[c][l];
                let e1 = self.pt_edge[self.path[c][l]];
                let e2 = self.pt_edge[self.path[c][(l + 1) % m]];
                assert!(
                    FACE_EDGES[f].contains(&e1) && FACE_EDGES[f].contains(&e2),
                    "curve {c} link {l}: face {f} does not carry edges {e1},{e2}"
                );
            }
            for &p in &self.path[c] {
                assert!(
                    self.edge_pts[self.pt_edge[p]].contains(&p),
                    "path point {p} missing from its edge order"
                );
            }
        }
    }

    /// Reduces to minimal position and returns the final crossing data.
    pub fn minimize(&mut self) -> CrossingSet {
        let mut cs = self.compute_crossings();
        let mut guard = cs.list.len() + 8;
        loop {
            match self.find_bigon(&cs) {
                None => return cs,
                Some(b) => {
                    self.remove_bigon(&cs, b);
                    #[cfg(debug_assertions)]
                    self.validate();
                    cs = self.compute_crossings();
                }
            }
            assert!(guard > 0, "bigon removal failed to terminate");
            guard -= 1;
        }
    }
}

/// Complement regions of the reference curve (curve 1): every edge is cut into
/// intervals by that curve's points, and intervals are glued along faces. A
/// connected essential curve on the five-punctured sphere always leaves
/// exactly two regions.
pub struct Regions {
    parent: Vec<usize>,
    offsets: [usize; EDGES + 1],
    /// (face, point) -> index in that face's item walk.
    item_of: std::collections::HashMap<(usize, usize), usize>,
    items: Vec<Vec<Item>>,
    pub puncture_region: [usize; PUNCTURES],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Item {
    Interval(usize),
    Point(usize),
}

fn uf_find(parent: &mut Vec<usize>, x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let nxt = parent[c];
        parent[c] = r;
        c = nxt;
    }
    r
}

fn uf_union(parent: &mut Vec<usize>, a: usize, b: usize) {
    let (ra, rb) = (uf_find(parent, a), uf_find(parent, b));
    if ra != rb {
        parent[ra] = rb;
    }
}

impl Regions {
    pub fn new(arr: &Arrangement) -> Regions {
        // Interval slots count only reference-curve points.
        let mut w1 = [0usize; EDGES];
        for e in 0..EDGES {
            w1[e] = arr.edge_pts[e]
                .iter()
                .filter(|&&p| arr.pt_curve[p] == 1)
                .count();
        }
        let mut offsets = [0usize; EDGES + 1];
        for e in 0..EDGES {
            offsets[e + 1] = offsets[e] + w1[e] + 1;
        }
        let mut parent: Vec<usize> = (0..offsets[EDGES]).collect();
        let mut items: Vec<Vec<Item>> = vec![Vec::new(); FACES];
        let mut item_of = std::collections::HashMap::new();
        for f in 0..FACES {
            for i in 0..3 {
                let e = FACE_EDGES[f][i];
                let pts: Vec<usize> = arr.edge_pts[e]
                    .iter()
                    .copied()
                    .filter(|&p| arr.pt_curve[p] == 1)
                    .collect();
                let k = pts.len();
                if edge_forward_in_face(f, e) {
                    for (r, &p) in pts.iter().enumerate() {
                        items[f].push(Item::Interval(offsets[e] + r));
                        items[f].push(Item::Point(p));
                    }
                    items[f].push(Item::Interval(offsets[e] + k));
                } else {
                    for (r, &p) in pts.iter().enumerate().rev() {
                        items[f].push(Item::Interval(offsets[e] + r + 1));
                        items[f].push(Item::Point(p));
                    }
                    items[f].push(Item::Interval(offsets[e]));
                }
            }
            let m = items[f].len();
            for idx in 0..m {
                if let Item::Point(p) = items[f][idx] {
                    item_of.insert((f, p), idx);
                }
                // Consecutive intervals with no point between them meet at a
                // corner of the face.
                if let (Item::Interval(a), Item::Interval(b)) =
                    (items[f][idx], items[f][(idx + 1) % m])
                {
                    uf_union(&mut parent, a, b);
                }
            }
        }
        // Chords split their face; glue the flanking intervals across each
        // chord endpoint pair.
        let n1 = arr.path[1].len();
        for l in 0..n1 {
            let f = arr.link_face[1][l];
            let (q, q2) = arr.link_ends(1, l);
            let m = items[f].len();
            let iq = item_of[&(f, q)];
            let iq2 = item_of[&(f, q2)];
            let prev = |i: usize| match items[f][(i + m - 1) % m] {
                Item::Interval(v) => v,
                Item::Point(_) => unreachable!("points are flanked by intervals"),
            };
            let next = |i: usize| match items[f][(i + 1) % m] {
                Item::Interval(v) => v,
                Item::Point(_) => unreachable!("points are flanked by intervals"),
            };
            uf_union(&mut parent, prev(iq), next(iq2));
            uf_union(&mut parent, next(iq), prev(iq2));
        }
        let mut puncture_region = [0usize; PUNCTURES];
        for v in 0..PUNCTURES {
            let e = (0..EDGES)
                .find(|&e| EDGE_ENDPOINTS[e].0 == v || EDGE_ENDPOINTS[e].1 == v)
                .expect("every puncture has an edge");
            let slot = if EDGE_ENDPOINTS[e].0 == v { 0 } else { w1[e] };
            puncture_region[v] = uf_find(&mut parent, offsets[e] + slot);
        }
        let mut roots: Vec<usize> = (0..offsets[EDGES])
            .map(|i| uf_find(&mut parent, i))
            .collect();
        roots.sort_unstable();
        roots.dedup();
        assert_eq!(roots.len(), 2, "a curve leaves exactly two regions");
        Regions {
            parent,
            offsets,
            item_of,
            items,
            puncture_region,
        }
    }

    pub fn side_of_slot(&mut self, edge: usize, slot: usize) -> usize {
        let id = self.offsets[edge] + slot;
        uf_find(&mut self.parent, id)
    }

    /// Region of a curve-0 point: its slot counts the reference-curve points
    /// before it on the edge.
    pub fn side_of_point(&mut self, arr: &Arrangement, p: usize) -> usize {
        let e = arr.pt_edge[p];
        let slot = arr.edge_pts[e]
            .iter()
            .take_while(|&&q| q != p)
            .filter(|&&q| arr.pt_curve[q] == 1)
            .count();
        self.side_of_slot(e, slot)
    }

    /// Region touching the reference chord of crossing `x` on its plus or
    /// minus side, read off next to the chord's start point.
    pub fn flank_region(&mut self, arr: &Arrangement, c: &Crossing, plus: bool) -> usize {
        let f = c.face;
        let q = arr.path[1][c.b_link];
        let idx = self.item_of[&(f, q)];
        let m = self.items[f].len();
        let item = if plus {
            self.items[f][(idx + 1) % m]
        } else {
            self.items[f][(idx + m - 1) % m]
        };
        match item {
            Item::Interval(v) => uf_find(&mut self.parent, v),
            Item::Point(_) => unreachable!("points are flanked by intervals"),
        }
    }

}
