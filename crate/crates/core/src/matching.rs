//! Perfect matchings: existence (Edmonds' blossom algorithm), enumeration,
//! matchings through or avoiding prescribed edges, Tutte barriers, and the
//! structure of subgraphs cut off by six edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_cut, odd_count, CubicGraph, EdgeId, Graph, Subgraph, Vertex};

/// Largest subgraph order for which Tutte barriers are searched exhaustively.
pub const TUTTE_SEARCH_LIMIT: usize = 24;

/// Default cap on the number of enumerated perfect matchings.
pub const DEFAULT_PM_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PerfectMatching {
    edges: Vec<EdgeId>,
}

impl PerfectMatching {
    /// Wraps an edge set, sorting it. Use [`PerfectMatching::is_perfect_in`]
    /// to validate against a host.
    pub fn new(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        PerfectMatching { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Every vertex of `h` is covered by exactly one edge, all edges lie in
    /// `h`, and none is a loop.
    pub fn is_perfect_in(&self, h: &Subgraph<'_>) -> bool {
        let g = h.parent();
        let mut covered = vec![0u8; g.order()];
        for &e in &self.edges {
            if e >= g.size() || !h.contains_edge(e) || g.is_loop(e) {
                return false;
            }
            let (u, v) = g.ends(e);
            covered[u] += 1;
            covered[v] += 1;
        }
        h.vertices().all(|v| covered[v] == 1) && self.edges.len() * 2 == h.order()
    }

    /// Bitmask over edge ids; callers must ensure ids are below 128.
    pub fn mask(&self) -> u128 {
        self.edges.iter().fold(0u128, |m, &e| m | (1u128 << e))
    }
}

/// Maximum matching of `h` as a mate array over parent vertex ids.
fn maximum_matching(h: &Subgraph<'_>) -> Vec<Option<EdgeId>> {
    let g = h.parent();
    let verts: Vec<Vertex> = h.vertices().collect();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let n = verts.len();
    let mut adj = vec![Vec::new(); n];
    for (i, &v) in verts.iter().enumerate() {
        for e in h.incident(v) {
            let w = g.other_end(e, v);
            if w != v {
                adj[i].push(index[w]);
            }
        }
        adj[i].sort_unstable();
        adj[i].dedup();
    }
    let mate = Blossom::new(&adj).solve();
    let mut out = vec![None; g.order()];
    for (i, m) in mate.iter().enumerate() {
        if let Some(j) = *m {
            let (u, w) = (verts[i], verts[j]);
            let e = h.incident(u).filter(|&e| g.other_end(e, u) == w && !g.is_loop(e)).min();
            out[u] = e;
        }
    }
    out
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::new(),
        }
    }

    fn solve(mut self) -> Vec<Option<usize>> {
        let n = self.adj.len();
        // greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                let end = self.find_path(root);
                let mut v = end;
                while v != NONE {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate.iter().map(|&m| (m != NONE).then_some(m)).collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push(m);
                }
            }
        }
        NONE
    }
}

/// A perfect matching of `h`, if one exists.
pub fn has_perfect_matching(h: &Subgraph<'_>) -> Option<PerfectMatching> {
    if h.order() % 2 == 1 {
        return None;
    }
    let mate = maximum_matching(h);
    if h.vertices().any(|v| mate[v].is_none()) {
        return None;
    }
    let edges = h.vertices().filter_map(|v| mate[v]).collect();
    Some(PerfectMatching::new(edges))
}

/// All perfect matchings of `h`, sorted lexicographically by edge ids.
pub fn enumerate_in(h: &Subgraph<'_>, cap: usize) -> Result<Vec<PerfectMatching>> {
    if cap == 0 {
        return Err(Error::BadParameter("pm cap must be at least 1".into()));
    }
    let mut out = Vec::new();
    if h.order() % 2 == 1 {
        return Ok(out);
    }
    let g = h.parent();
    let verts: Vec<Vertex> = h.vertices().collect();
    let incident: Vec<Vec<EdgeId>> = (0..g.order())
        .map(|v| {
            if !h.contains_vertex(v) {
                return Vec::new();
            }
            let mut es: Vec<EdgeId> = h.incident(v).filter(|&e| !g.is_loop(e)).collect();
            es.sort_unstable();
            es.dedup();
            es
        })
        .collect();
    let mut covered = vec![false; g.order()];
    let mut chosen = Vec::with_capacity(verts.len() / 2);
    let mut ctx = Enum { g, verts: &verts, incident: &incident, cap, out: &mut out };
    ctx.run(&mut covered, &mut chosen)?;
    out.sort();
    Ok(out)
}

struct Enum<'a> {
    g: &'a Graph,
    verts: &'a [Vertex],
    incident: &'a [Vec<EdgeId>],
    cap: usize,
    out: &'a mut Vec<PerfectMatching>,
}

impl Enum<'_> {
    fn run(&mut self, covered: &mut [bool], chosen: &mut Vec<EdgeId>) -> Result<()> {
        let Some(&v) = self.verts.iter().find(|&&v| !covered[v]) else {
            if self.out.len() == self.cap {
                return Err(Error::CapExceeded { cap: self.cap });
            }
            self.out.push(PerfectMatching::new(chosen.clone()));
            return Ok(());
        };
        for &e in &self.incident[v] {
            let w = self.g.other_end(e, v);
            if covered[w] {
                continue;
            }
            covered[v] = true;
            covered[w] = true;
            chosen.push(e);
            if !self.stuck(covered) {
                self.run(covered, chosen)?;
            }
            chosen.pop();
            covered[v] = false;
            covered[w] = false;
        }
        Ok(())
    }

    fn stuck(&self, covered: &[bool]) -> bool {
        self.verts.iter().any(|&x| {
            !covered[x] && self.incident[x].iter().all(|&e| covered[self.g.other_end(e, x)])
        })
    }
}

/// All perfect matchings of `g` in lexicographic order; errors when there
/// are more than `cap`.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<PerfectMatching>> {
    enumerate_in(&Subgraph::whole(g), cap)
}

/// A perfect matching of `g` containing every edge of `required`.
pub fn pm_containing(g: &Graph, required: &[EdgeId]) -> Result<Option<PerfectMatching>> {
    let mut seen = vec![false; g.order()];
    for &e in required {
        if e >= g.size() {
            return Err(Error::InvalidEdge(e));
        }
        if g.is_loop(e) {
            return Err(Error::RequiredNotMatching);
        }
        let (u, v) = g.ends(e);
        if seen[u] || seen[v] {
            return Err(Error::RequiredNotMatching);
        }
        seen[u] = true;
        seen[v] = true;
    }
    let matched: Vec<Vertex> = (0..g.order()).filter(|&v| seen[v]).collect();
    let rest = Subgraph::whole(g).without_vertices(&matched);
    Ok(has_perfect_matching(&rest).map(|pm| {
        let mut edges = pm.edges().to_vec();
        edges.extend_from_slice(required);
        PerfectMatching::new(edges)
    }))
}

/// A perfect matching of `g` using no edge of `forbidden`.
pub fn pm_avoiding(g: &Graph, forbidden: &[EdgeId]) -> Option<PerfectMatching> {
    has_perfect_matching(&Subgraph::whole(g).without_edges(forbidden))
}

/// A set `S` with more odd components in `H - S` than vertices in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteCertificate {
    pub s: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
    pub odd_count: usize,
}

impl TutteCertificate {
    /// Recomputes the components of `h - S` and checks the barrier condition.
    pub fn verify(&self, h: &Subgraph<'_>) -> bool {
        if self.s.iter().any(|&v| !h.contains_vertex(v)) {
            return false;
        }
        let comps = h.without_vertices(&self.s).components();
        let odd = odd_count(&comps);
        let listed: Vec<Vec<Vertex>> = comps.iter().map(|c| c.vertices().collect()).collect();
        odd == self.odd_count && odd > self.s.len() && listed == self.components
    }
}

/// Inclusion-minimal Tutte barrier of `h` (smallest size first, then
/// lexicographic), or `None` when `h` has a perfect matching.
pub fn tutte_certificate(h: &Subgraph<'_>) -> Result<Option<TutteCertificate>> {
    if has_perfect_matching(h).is_some() {
        return Ok(None);
    }
    let verts: Vec<Vertex> = h.vertices().collect();
    if verts.len() > TUTTE_SEARCH_LIMIT {
        return Err(Error::TooLarge { what: "Tutte barrier search order", limit: TUTTE_SEARCH_LIMIT });
    }
    for k in 0..=verts.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let s: Vec<Vertex> = idx.iter().map(|&i| verts[i]).collect();
            let comps = h.without_vertices(&s).components();
            let odd = odd_count(&comps);
            if odd > k {
                let components = comps.iter().map(|c| c.vertices().collect()).collect();
                return Ok(Some(TutteCertificate { s, components, odd_count: odd }));
            }
            if !next_combination(&mut idx, verts.len()) {
                break;
            }
        }
    }
    Err(Error::Internal("no Tutte barrier found for a graph without a perfect matching".into()))
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Barrier branch of [`analyze_six_cut`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SixCutBarrier {
    pub s: Vec<Vertex>,
    pub components: Vec<Vec<Vertex>>,
    /// `|δ_G(L)|` for each component `L`, in the same order.
    pub cut_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SixCutAnalysis {
    PerfectMatching { matching: PerfectMatching },
    Barrier(SixCutBarrier),
}

impl SixCutBarrier {
    /// Checks the barrier structure forced on a subgraph `G[side]` with a
    /// 6-edge boundary: `S` is an independent set of vertices trivalent in
    /// `H`, every component of `H - S` is odd with exactly three boundary
    /// edges in `G`, there are `|S| + 2` of them, and no boundary edge of `H`
    /// touches `S`.
    pub fn verify(&self, g: &Graph, side: &[Vertex]) -> std::result::Result<(), String> {
        let h = Subgraph::induced(g, side);
        let in_s = {
            let mut m = vec![false; g.order()];
            for &v in &self.s {
                if !h.contains_vertex(v) {
                    return Err(format!("vertex {v} of S is not in H"));
                }
                m[v] = true;
            }
            m
        };
        for &v in &self.s {
            if h.degree(v) != 3 {
                return Err(format!("vertex {v} of S is not trivalent in H"));
            }
            if h.incident(v).any(|e| in_s[g.other_end(e, v)]) {
                return Err(format!("S is not independent at {v}"));
            }
        }
        let comps = h.without_vertices(&self.s).components();
        let listed: Vec<Vec<Vertex>> = comps.iter().map(|c| c.vertices().collect()).collect();
        if listed != self.components {
            return Err("listed components differ from those of H - S".into());
        }
        if comps.iter().any(|c| c.order() % 2 == 0) {
            return Err("H - S has an even component".into());
        }
        if odd_count(&comps) != self.s.len() + 2 {
            return Err(format!("odd(H - S) = {} but |S| + 2 = {}", odd_count(&comps), self.s.len() + 2));
        }
        let sizes: Vec<usize> = listed.iter().map(|c| edge_cut(g, c).map(|k| k.len()).unwrap_or(0)).collect();
        if sizes != self.cut_sizes || sizes.iter().any(|&k| k != 3) {
            return Err(format!("component boundaries {sizes:?} are not all 3"));
        }
        let boundary = edge_cut(g, side).map_err(|e| e.to_string())?;
        if boundary.edges.iter().any(|&e| {
            let (u, v) = g.ends(e);
            in_s[u] || in_s[v]
        }) {
            return Err("a boundary edge of H touches S".into());
        }
        Ok(())
    }
}

/// For a bridgeless cubic `g` and a vertex set `side` with `|δ(side)| = 6`:
/// a perfect matching of `H = G[side]`, or the barrier structure of `H`.
pub fn analyze_six_cut(g: &CubicGraph, side: &[Vertex]) -> Result<SixCutAnalysis> {
    g.require_bridgeless()?;
    let cut = edge_cut(g, side)?;
    if cut.len() != 6 {
        return Err(Error::NotSixCut { size: cut.len() });
    }
    let h = Subgraph::induced(g, side);
    if let Some(matching) = has_perfect_matching(&h) {
        return Ok(SixCutAnalysis::PerfectMatching { matching });
    }
    let cert = tutte_certificate(&h)?.ok_or_else(|| Error::Internal("matching vanished".into()))?;
    let cut_sizes = cert.components.iter().map(|c| edge_cut(g, c).map(|k| k.len())).collect::<Result<_>>()?;
    let barrier = SixCutBarrier { s: cert.s, components: cert.components, cut_sizes };
    barrier.verify(g, side).map_err(Error::Internal)?;
    Ok(SixCutAnalysis::Barrier(barrier))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn counts_of_small_graphs() {
        assert_eq!(enumerate_perfect_matchings(&families::k4(), 100).unwrap().len(), 3);
        assert_eq!(enumerate_perfect_matchings(&families::petersen(), 100).unwrap().len(), 6);
        assert_eq!(enumerate_perfect_matchings(&families::k33(), 100).unwrap().len(), 6);
        assert_eq!(enumerate_perfect_matchings(&families::dipole3(), 100).unwrap().len(), 3);
        assert_eq!(
            enumerate_perfect_matchings(&families::petersen(), 5).unwrap_err(),
            Error::CapExceeded { cap: 5 }
        );
        assert!(enumerate_perfect_matchings(&families::k4(), 0).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let g = families::cube_q3();
        let pms = enumerate_perfect_matchings(&g, 1000).unwrap();
        assert_eq!(pms.len(), 9);
        assert!(pms.windows(2).all(|w| w[0] < w[1]));
        assert!(pms.iter().all(|pm| pm.is_perfect_in(&Subgraph::whole(&g))));
    }

    #[test]
    fn existence_examples() {
        let p = families::petersen();
        let pm = has_perfect_matching(&Subgraph::whole(&p)).unwrap();
        assert!(pm.is_perfect_in(&Subgraph::whole(&p)));
        let q = families::cube_q3();
        let h = Subgraph::whole(&q).without_vertices(&families::q3_hexagon());
        assert!(has_perfect_matching(&h).is_none());
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(has_perfect_matching(&Subgraph::whole(&k2)).unwrap().edges(), &[0]);
    }

    #[test]
    fn prescribed_edges() {
        let p = families::petersen();
        let pm = pm_containing(&p, &[0]).unwrap().unwrap();
        assert!(pm.contains(0));
        let prism = families::prism3();
        let a = prism.edge_between(0, 1).unwrap();
        let b = prism.edge_between(3, 4).unwrap();
        let pm = pm_containing(&prism, &[a, b]).unwrap().unwrap();
        assert!(pm.contains(a) && pm.contains(b));
        let k4 = families::k4();
        assert_eq!(pm_containing(&k4, &[0, 1]).unwrap_err(), Error::RequiredNotMatching);
        // leaves vertices 2 and 4, which are not adjacent
        let c = prism.edge_between(3, 5).unwrap();
        assert!(pm_containing(&prism, &[a, c]).unwrap().is_none());
    }

    #[test]
    fn forbidden_edges() {
        let k4 = families::k4();
        let pms = enumerate_perfect_matchings(&k4, 10).unwrap();
        let pm = pm_avoiding(&k4, pms[0].edges()).unwrap();
        assert!(pm != pms[0] && pms.contains(&pm));
        assert!(pm_avoiding(&families::petersen(), &[]).is_some());
    }

    #[test]
    fn tutte_examples() {
        let g = Graph::from_edges(2, &[]).unwrap();
        let c = tutte_certificate(&Subgraph::whole(&g)).unwrap().unwrap();
        assert_eq!((c.s.len(), c.odd_count), (0, 2));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = Subgraph::whole(&claw);
        let c = tutte_certificate(&h).unwrap().unwrap();
        assert_eq!((c.s.clone(), c.odd_count), (vec![0], 3));
        assert!(c.verify(&h));
        assert!(tutte_certificate(&Subgraph::whole(&families::k4())).unwrap().is_none());
    }

    #[test]
    fn six_cut_examples() {
        let q = families::cube_q3();
        let side = [0, 7];
        match analyze_six_cut(&q, &side).unwrap() {
            SixCutAnalysis::Barrier(b) => {
                assert!(b.s.is_empty());
                assert_eq!(b.components, vec![vec![0], vec![7]]);
                assert_eq!(b.cut_sizes, vec![3, 3]);
            }
            other => panic!("expected barrier, got {other:?}"),
        }
        let p = families::petersen();
        let side: Vec<Vertex> = (0..10).filter(|v| !families::PETERSEN_HEXAGON.contains(v)).collect();
        match analyze_six_cut(&p, &side).unwrap() {
            SixCutAnalysis::Barrier(b) => {
                assert_eq!(b.s, vec![5]);
                assert_eq!(b.components.len(), 3);
                assert!(b.components.iter().all(|c| c.len() == 1));
            }
            other => panic!("expected barrier, got {other:?}"),
        }
        assert_eq!(analyze_six_cut(&p, &[0]).unwrap_err(), Error::NotSixCut { size: 3 });
    }

    #[test]
    fn combinations_in_order() {
        let mut idx = vec![0, 1];
        let mut all = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            all.push(idx.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
