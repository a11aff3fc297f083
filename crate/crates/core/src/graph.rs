//! Multigraph representation with stable edge ids.
//!
//! Every edge is identified by its id, never by its endpoint pair, so parallel
//! edges and loops are handled uniformly. A loop contributes two edge-ends to
//! its vertex and therefore appears twice in that vertex's incidence list.

use std::collections::VecDeque;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Undirected multigraph. Edge ids are `0..size()` in insertion order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    ends: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { ends: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex(x));
            }
        }
        let id = self.ends.len();
        self.ends.push((u, v));
        self.adj[u].push(id);
        self.adj[v].push(id);
        Ok(id)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.ends[e]
    }

    pub fn edge_list(&self) -> &[(Vertex, Vertex)] {
        &self.ends
    }

    /// The endpoint of `e` opposite to `v` (for a loop, `v` itself).
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Incident edge ids in insertion order; loops appear twice.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.ends[e];
        a == b
    }

    pub fn has_loop(&self) -> bool {
        (0..self.size()).any(|e| self.is_loop(e))
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ends.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn are_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].iter().any(|&e| self.other_end(e, u) == v)
    }

    /// Lowest-id edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj[u].iter().copied().filter(|&e| self.other_end(e, u) == v).min()
    }

    pub fn neighbours(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || Subgraph::whole(self).components().len() == 1
    }

    /// Lowest-id bridge, if any. Loops are never bridges.
    pub fn find_bridge(&self) -> Option<EdgeId> {
        let whole = Subgraph::whole(self);
        let base = whole.components().len();
        (0..self.size())
            .filter(|&e| !self.is_loop(e))
            .find(|&e| whole.without_edges(&[e]).components().len() > base)
    }

    /// Proper 2-colouring of the vertices (false/true per vertex) if bipartite.
    /// Each component is coloured starting from its lowest vertex with `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        Subgraph::whole(self).bipartition()
    }

    /// Betti number `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        let comps = Subgraph::whole(self).components().len();
        self.size() + comps - self.order()
    }
}

/// A multigraph in which every vertex has exactly three edge-ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Graph", into = "Graph")]
pub struct CubicGraph(Graph);

impl CubicGraph {
    pub fn new(graph: Graph) -> Result<Self> {
        if let Some(v) = (0..graph.order()).find(|&v| graph.degree(v) != 3) {
            return Err(Error::NotCubic { vertex: v, degree: graph.degree(v) });
        }
        Ok(CubicGraph(graph))
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::new(Graph::from_edges(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Errors unless the graph is loopless and bridgeless.
    pub fn require_bridgeless(&self) -> Result<()> {
        if let Some(e) = (0..self.size()).find(|&e| self.is_loop(e)) {
            // a loop at a trivalent vertex hangs on a bridge
            let v = self.ends(e).0;
            let bridge = self.incident(v).iter().copied().find(|&f| f != e).unwrap_or(e);
            return Err(Error::HasBridge { edge: bridge });
        }
        match self.find_bridge() {
            Some(edge) => Err(Error::HasBridge { edge }),
            None => Ok(()),
        }
    }
}

impl Deref for CubicGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for CubicGraph {
    type Error = Error;
    fn try_from(g: Graph) -> Result<Self> {
        CubicGraph::new(g)
    }
}

impl From<CubicGraph> for Graph {
    fn from(g: CubicGraph) -> Graph {
        g.0
    }
}

/// Vertex set `X` together with the edges `δ(X)` having exactly one end in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub side: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl EdgeCut {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// No two cut edges share an endpoint.
    pub fn is_independent(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for &e in &self.edges {
            let (u, v) = g.ends(e);
            for x in [u, v] {
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        true
    }
}

/// `δ(x)`: the edges with exactly one end in `x`, ordered by id.
pub fn edge_cut(g: &Graph, x: &[Vertex]) -> Result<EdgeCut> {
    let mut inside = vec![false; g.order()];
    for &v in x {
        if v >= g.order() {
            return Err(Error::InvalidVertex(v));
        }
        inside[v] = true;
    }
    let count = inside.iter().filter(|&&b| b).count();
    if count == 0 || count == g.order() {
        return Err(Error::EmptySide);
    }
    let edges = (0..g.size())
        .filter(|&e| {
            let (u, v) = g.ends(e);
            inside[u] != inside[v]
        })
        .collect();
    let side = (0..g.order()).filter(|&v| inside[v]).collect();
    Ok(EdgeCut { side, edges })
}

/// Subgraph of a parent graph; keeps the parent's vertex and edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph<'a> {
    parent: &'a Graph,
    vmask: Vec<bool>,
    emask: Vec<bool>,
}

impl<'a> Subgraph<'a> {
    pub fn whole(g: &'a Graph) -> Self {
        Subgraph { parent: g, vmask: vec![true; g.order()], emask: vec![true; g.size()] }
    }

    /// Subgraph induced by a vertex set.
    pub fn induced(g: &'a Graph, vertices: &[Vertex]) -> Self {
        let mut vmask = vec![false; g.order()];
        for &v in vertices {
            vmask[v] = true;
        }
        let emask = (0..g.size())
            .map(|e| {
                let (u, v) = g.ends(e);
                vmask[u] && vmask[v]
            })
            .collect();
        Subgraph { parent: g, vmask, emask }
    }

    /// Explicit vertex and edge sets; every edge must have both ends retained.
    pub fn from_parts(g: &'a Graph, vertices: &[Vertex], edges: &[EdgeId]) -> Result<Self> {
        let mut vmask = vec![false; g.order()];
        for &v in vertices {
            if v >= g.order() {
                return Err(Error::InvalidVertex(v));
            }
            vmask[v] = true;
        }
        let mut emask = vec![false; g.size()];
        for &e in edges {
            if e >= g.size() {
                return Err(Error::InvalidEdge(e));
            }
            let (u, v) = g.ends(e);
            if !vmask[u] || !vmask[v] {
                return Err(Error::InvalidEdge(e));
            }
            emask[e] = true;
        }
        Ok(Subgraph { parent: g, vmask, emask })
    }

    pub fn parent(&self) -> &'a Graph {
        self.parent
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vmask[v]
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.emask[e]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vmask.len()).filter(move |&v| self.vmask[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.emask.len()).filter(move |&e| self.emask[e])
    }

    pub fn order(&self) -> usize {
        self.vmask.iter().filter(|&&b| b).count()
    }

    pub fn size(&self) -> usize {
        self.emask.iter().filter(|&&b| b).count()
    }

    pub fn incident(&self, v: Vertex) -> impl Iterator<Item = EdgeId> + '_ {
        self.parent.incident(v).iter().copied().filter(move |&e| self.emask[e])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident(v).count()
    }

    /// Removes vertices together with their incident edges.
    pub fn without_vertices(&self, vs: &[Vertex]) -> Subgraph<'a> {
        let mut out = self.clone();
        for &v in vs {
            out.vmask[v] = false;
            for &e in self.parent.incident(v) {
                out.emask[e] = false;
            }
        }
        out
    }

    pub fn without_edges(&self, es: &[EdgeId]) -> Subgraph<'a> {
        let mut out = self.clone();
        for &e in es {
            out.emask[e] = false;
        }
        out
    }

    /// Connected components, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<Subgraph<'a>> {
        let n = self.vmask.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut vmask = vec![false; n];
            let mut emask = vec![false; self.emask.len()];
            let mut queue = VecDeque::from([s]);
            comp[s] = id;
            vmask[s] = true;
            while let Some(v) = queue.pop_front() {
                for e in self.incident(v) {
                    emask[e] = true;
                    let w = self.parent.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        vmask[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(Subgraph { parent: self.parent, vmask, emask });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Proper vertex 2-colouring if the subgraph is bipartite; `false` for
    /// the lowest vertex of each component. Vertices outside are `false`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vmask.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in self.vertices() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let cv = colour[v].unwrap();
                for e in self.incident(v) {
                    let w = self.parent.other_end(e, v);
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cv);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }
}

/// Number of components with an odd number of vertices.
pub fn odd_count(components: &[Subgraph<'_>]) -> usize {
    components.iter().filter(|c| c.order() % 2 == 1).count()
}

/// Length of a shortest circuit: 1 for a loop, 2 for parallel edges.
/// `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for e in 0..g.size() {
        let (u, v) = g.ends(e);
        let len = if u == v { Some(1) } else { shortest_path_avoiding(g, u, v, e).map(|d| d + 1) };
        if let Some(len) = len {
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

fn shortest_path_avoiding(g: &Graph, from: Vertex, to: Vertex, skip: EdgeId) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &f in g.incident(x) {
            if f == skip {
                continue;
            }
            let y = g.other_end(f, x);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == to {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// Vertex sequences of all circuits of length `len` (3 ≤ len) in the
/// underlying simple graph, each listed once, starting at its lowest vertex
/// with the smaller of the two neighbours second.
pub fn circuits_of_length(g: &Graph, len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend_circuit(g, len, &mut path, &mut out);
    }
    out
}

fn extend_circuit(g: &Graph, len: usize, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        if g.are_adjacent(last, s) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    let mut next: Vec<Vertex> = g.neighbours(last).filter(|&w| w > s && !path.contains(&w)).collect();
    next.sort_unstable();
    next.dedup();
    for w in next {
        path.push(w);
        extend_circuit(g, len, path, out);
        path.pop();
    }
}

/// Vertex sets of the chordless circuits of the underlying simple graph
/// (length ≥ 3), plus `{v}` for each loop and `{u, v}` for each parallel pair.
/// Every vertex set inducing a subgraph with a circuit contains one of these.
pub fn minimal_cyclic_vertex_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut pairs = std::collections::BTreeSet::new();
    for e in 0..g.size() {
        let (u, v) = g.ends(e);
        if u == v {
            out.push(vec![u]);
        } else {
            let (a, b) = (u.min(v), u.max(v));
            let mult = g.incident(a).iter().filter(|&&f| g.other_end(f, a) == b).count();
            if mult >= 2 {
                pairs.insert((a, b));
            }
        }
    }
    out.sort();
    out.dedup();
    out.extend(pairs.into_iter().map(|(a, b)| vec![a, b]));
    let mut path = Vec::new();
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        extend_chordless(g, &mut path, &mut out);
    }
    out
}

fn extend_chordless(g: &Graph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let s = path[0];
    let last = *path.last().unwrap();
    let mut next: Vec<Vertex> = g.neighbours(last).filter(|&w| w > s && !path.contains(&w)).collect();
    next.sort_unstable();
    next.dedup();
    for w in next {
        // interior vertices p1..p(k-1) must not see w
        if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&p| g.are_adjacent(p, w)) {
            continue;
        }
        if path.len() >= 2 && g.are_adjacent(w, s) {
            if path[1] < w {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
            continue;
        }
        path.push(w);
        extend_chordless(g, path, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cubic_validation() {
        assert!(CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).is_ok());
        assert_eq!(
            CubicGraph::from_edges(2, &[(0, 0), (1, 1)]).unwrap_err(),
            Error::NotCubic { vertex: 0, degree: 2 }
        );
    }

    #[test]
    fn cuts_of_small_graphs() {
        let k4 = families::k4();
        assert_eq!(edge_cut(&k4, &[0]).unwrap().len(), 3);
        let d = families::dipole3();
        assert_eq!(edge_cut(&d, &[0]).unwrap().edges, vec![0, 1, 2]);
        assert_eq!(edge_cut(&k4, &[]).unwrap_err(), Error::EmptySide);
        assert_eq!(edge_cut(&k4, &[0, 1, 2, 3]).unwrap_err(), Error::EmptySide);
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&families::dipole3()), Some(2));
        assert_eq!(girth(&families::k33()), Some(4));
        assert_eq!(girth(&families::k4()), Some(3));
        let mut g = Graph::new(2);
        g.add_edge(0, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 1).unwrap();
        assert_eq!(girth(&g), Some(1));
        assert_eq!(girth(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), None);
    }

    #[test]
    fn components_and_odd_count() {
        let g = families::cube_q3();
        // removing an induced 6-cycle of Q3 leaves two antipodal vertices
        let hex = families::q3_hexagon();
        let h = Subgraph::whole(&g).without_vertices(&hex);
        let comps = h.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.order() == 1));
        assert_eq!(odd_count(&comps), 2);

        let p = families::petersen();
        let h = Subgraph::whole(&p).without_vertices(&families::PETERSEN_HEXAGON);
        let comps = h.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].order(), 4);
        assert_eq!(comps[0].size(), 3);
        assert_eq!(odd_count(&comps), 0);

        let empty = Subgraph::induced(&p, &[]);
        assert_eq!(empty.components().len(), 0);
    }

    #[test]
    fn bridges() {
        assert_eq!(families::petersen().find_bridge(), None);
        // two K4-minus-an-edge blocks joined by a bridge
        let g = Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (3, 7)],
        )
        .unwrap();
        assert!(g.find_bridge().is_none());
        let g = Graph::from_edges(
            10,
            &[
                (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 4), (4, 5),
                (5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (8, 9), (9, 6),
            ],
        )
        .unwrap();
        assert_eq!(g.find_bridge(), Some(7));
    }

    #[test]
    fn chordless_sets_of_k4_are_triangles() {
        let sets = minimal_cyclic_vertex_sets(&families::k4());
        assert_eq!(sets.len(), 4);
        assert!(sets.iter().all(|s| s.len() == 3));
        let p = minimal_cyclic_vertex_sets(&families::petersen());
        // pentagons and hexagons; every longer circuit has a chord
        let count = |k: usize| p.iter().filter(|s| s.len() == k).count();
        assert_eq!((count(5), count(6)), (12, 10));
        assert_eq!(p.len(), 22);
        assert_eq!(circuits_of_length(&families::petersen(), 5).len(), 12);
    }
}
