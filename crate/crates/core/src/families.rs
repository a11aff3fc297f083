//! Generators for named cubic graphs and parametrised families.
//!
//! Simple graphs are built with their edges in lexicographic order, so the
//! edge ids agree with those obtained by parsing their graph6 encoding.
//!
//! Vertex numbering:
//! * Petersen: outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram
//!   `5+i -- 5+(i+2)%5`. [`PETERSEN_HEXAGON`] lists the induced 6-cycle of
//!   vertices at distance two from vertex 5, in cyclic order.
//! * Q3: vertices are 3-bit strings, edges join strings at Hamming distance 1.
//! * prism: triangles `0,1,2` and `3,4,5`, rungs `i -- i+3`.
//! * flower snark `J_k`: vertex `4i` is the centre of the `i`-th claw with
//!   leaves `4i+1` (b), `4i+2` (c), `4i+3` (d); the b's form a k-cycle and
//!   the c's and d's together form a 2k-cycle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Graph, Subgraph, Vertex};

/// Induced 6-cycle of the Petersen graph in cyclic order.
pub const PETERSEN_HEXAGON: [Vertex; 6] = [1, 2, 3, 4, 9, 6];

/// Vertex of the Petersen graph removed by [`petersen_join`].
pub const JOIN_REMOVED: Vertex = 0;

/// Name and parameters of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: String,
    pub params: Vec<i64>,
    /// Name of the component graph used by composite constructions.
    pub component: Option<String>,
}

fn simple(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> CubicGraph {
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    CubicGraph::from_edges(n, &edges).expect("generator produces a cubic graph")
}

pub fn petersen() -> CubicGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    simple(10, e)
}

pub fn k4() -> CubicGraph {
    simple(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> CubicGraph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    simple(6, e)
}

pub fn dipole3() -> CubicGraph {
    CubicGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn cube_q3() -> CubicGraph {
    let mut e = Vec::new();
    for v in 0..8usize {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                e.push((v, w));
            }
        }
    }
    simple(8, e)
}

/// Induced 6-cycle of Q3 avoiding the antipodal pair `0`, `7`.
pub fn q3_hexagon() -> [Vertex; 6] {
    [1, 3, 2, 6, 4, 5]
}

pub fn prism3() -> CubicGraph {
    simple(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn heawood() -> CubicGraph {
    let mut e: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        e.push((i, (i + 5) % 14));
    }
    simple(14, e)
}

/// Isaacs flower snark `J_k` for odd `k ≥ 5` (4k vertices).
pub fn flower_snark(k: usize) -> Result<CubicGraph> {
    if k < 5 || k % 2 == 0 {
        return Err(Error::BadParameter(format!("flower snark needs odd k >= 5, got {k}")));
    }
    let (a, b, c, d) = (|i: usize| 4 * i, |i: usize| 4 * i + 1, |i: usize| 4 * i + 2, |i: usize| 4 * i + 3);
    let mut e = Vec::new();
    for i in 0..k {
        let j = (i + 1) % k;
        e.push((a(i), b(i)));
        e.push((a(i), c(i)));
        e.push((a(i), d(i)));
        e.push((b(i), b(j)));
        if j == 0 {
            e.push((c(i), d(0)));
            e.push((d(i), c(0)));
        } else {
            e.push((c(i), c(j)));
            e.push((d(i), d(j)));
        }
    }
    Ok(simple(4 * k, e))
}

/// Removes a vertex and returns the remaining graph (vertices renumbered in
/// order) together with the new names of its former neighbours, sorted.
fn delete_vertex(g: &Graph, v: Vertex) -> (Vec<(Vertex, Vertex)>, usize, Vec<Vertex>) {
    let rename = |x: Vertex| if x > v { x - 1 } else { x };
    let edges = g
        .edge_list()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (rename(a), rename(b)))
        .collect();
    let mut nb: Vec<Vertex> = g.neighbours(v).map(rename).collect();
    nb.sort_unstable();
    (edges, g.order() - 1, nb)
}

/// Petersen graph minus [`JOIN_REMOVED`] joined by a 3-edge-cut to a
/// connected bipartite cubic graph minus `u`. The i-th 2-valent vertex of the
/// Petersen part (sorted) is joined to the `pairing[i]`-th 2-valent vertex of
/// the bipartite part (sorted). Petersen-part vertices come first.
pub fn petersen_join_with_pairing(b: &CubicGraph, u: Vertex, pairing: [usize; 3]) -> Result<(CubicGraph, [EdgeId; 3])> {
    if u >= b.order() {
        return Err(Error::InvalidVertex(u));
    }
    if b.order() < 4 {
        return Err(Error::TooSmall);
    }
    if b.bipartition().is_none() {
        return Err(Error::NotBipartite);
    }
    if !b.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut sorted = pairing;
    sorted.sort_unstable();
    if sorted != [0, 1, 2] {
        return Err(Error::BadParameter(format!("pairing {pairing:?} is not a permutation")));
    }
    let (pe, pn, pdeg2) = delete_vertex(&petersen(), JOIN_REMOVED);
    let (be, bn, bdeg2) = delete_vertex(b, u);
    if bdeg2.len() != 3 || bdeg2.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadParameter("removed vertex must have three distinct neighbours".into()));
    }
    let mut g = Graph::new(pn + bn);
    for (x, y) in pe {
        g.add_edge(x, y)?;
    }
    for (x, y) in be {
        g.add_edge(pn + x, pn + y)?;
    }
    let mut joins = [0; 3];
    for i in 0..3 {
        joins[i] = g.add_edge(pdeg2[i], pn + bdeg2[pairing[i]])?;
    }
    Ok((CubicGraph::new(g)?, joins))
}

/// [`petersen_join_with_pairing`] with the identity pairing.
pub fn petersen_join(b: &CubicGraph, u: Vertex) -> Result<CubicGraph> {
    petersen_join_with_pairing(b, u, [0, 1, 2]).map(|(g, _)| g)
}

/// Dot product: delete the independent edges `ab`, `cd` from `g1` and the
/// adjacent vertices `x`, `y` from `g2`, then join `a, b` to the other
/// neighbours of `x` and `c, d` to the other neighbours of `y`.
pub fn dot_product(g1: &CubicGraph, e1: EdgeId, e2: EdgeId, g2: &CubicGraph, x: Vertex, y: Vertex) -> Result<CubicGraph> {
    let (a, b) = g1.ends(e1);
    let (c, d) = g1.ends(e2);
    if [a, b].iter().any(|v| [c, d].contains(v)) || a == b || c == d {
        return Err(Error::BadParameter("dot product needs two independent edges".into()));
    }
    let xy = g2.edge_between(x, y).ok_or_else(|| Error::BadParameter("x and y must be adjacent".into()))?;
    let others = |v: Vertex| -> Vec<Vertex> {
        let mut o: Vec<Vertex> = g2.incident(v).iter().filter(|&&e| e != xy).map(|&e| g2.other_end(e, v)).collect();
        o.sort_unstable();
        o
    };
    let (xs, ys) = (others(x), others(y));
    if xs.iter().chain(ys.iter()).any(|&w| w == x || w == y) {
        return Err(Error::BadParameter("x and y must be joined by a single edge".into()));
    }
    let n1 = g1.order();
    let rename = |v: Vertex| n1 + v - usize::from(v > x) - usize::from(v > y);
    let mut edges = Vec::new();
    for (id, &(p, q)) in g1.edge_list().iter().enumerate() {
        if id != e1 && id != e2 {
            edges.push((p, q));
        }
    }
    for &(p, q) in g2.edge_list() {
        if ![p, q].iter().any(|v| *v == x || *v == y) {
            edges.push((rename(p), rename(q)));
        }
    }
    edges.extend([(a, rename(xs[0])), (b, rename(xs[1])), (c, rename(ys[0])), (d, rename(ys[1]))]);
    let n = n1 + g2.order() - 2;
    let g = Graph::from_edges(n, &edges)?;
    if g.is_simple() {
        Ok(simple(n, edges))
    } else {
        CubicGraph::new(g)
    }
}

/// The two dot products of two Petersen graphs: the removed edges of the
/// first copy are joined by an edge (`first`) or at distance two (`second`).
pub fn petersen_dot_products() -> [CubicGraph; 2] {
    let p = petersen();
    let e = |u, v| p.edge_between(u, v).unwrap();
    // (0,1) and (2,3) are joined by the edge 1-2; (0,1) and (7,9) are not adjacent to a common edge
    let first = dot_product(&p, e(0, 1), e(2, 3), &p, 0, 5).unwrap();
    let second = dot_product(&p, e(0, 1), e(7, 9), &p, 0, 5).unwrap();
    [first, second]
}

fn pairing_model(n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    points.shuffle(rng);
    let mut g = Graph::new(n);
    for pair in points.chunks(2) {
        if pair[0] == pair[1] {
            return None;
        }
        g.add_edge(pair[0], pair[1]).ok()?;
    }
    Some(g)
}

fn check_even_order(n: usize) -> Result<()> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::BadParameter(format!("cubic graphs need even order >= 2, got {n}")));
    }
    Ok(())
}

/// Random connected bridgeless loopless cubic multigraph from the pairing
/// model with rejection; reproducible per `(n, seed)`.
pub fn random_bridgeless_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    check_even_order(n)?;
    if n < 4 {
        return Err(Error::BadParameter("order must be at least 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(g) = pairing_model(n, &mut rng) {
            if g.is_connected() && g.find_bridge().is_none() {
                return CubicGraph::new(g);
            }
        }
    }
}

/// As [`random_bridgeless_cubic`] but rejecting parallel edges too; edge ids
/// are normalised to lexicographic order.
pub fn random_bridgeless_simple_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    check_even_order(n)?;
    if n < 4 {
        return Err(Error::BadParameter("order must be at least 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(g) = pairing_model(n, &mut rng) {
            if g.is_simple() && g.is_connected() && g.find_bridge().is_none() {
                return Ok(simple(n, g.edge_list().to_vec()));
            }
        }
    }
}

/// Random connected bipartite cubic multigraph on `n` vertices; the first
/// half of the vertices form one colour class.
pub fn random_bipartite_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    check_even_order(n)?;
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut g = Graph::new(n);
        for _ in 0..3 {
            let mut perm: Vec<usize> = (0..half).collect();
            perm.shuffle(&mut rng);
            for (a, &b) in perm.iter().enumerate() {
                g.add_edge(a, half + b)?;
            }
        }
        if g.is_connected() {
            return CubicGraph::new(g);
        }
    }
}

/// Random almost bipartite cubic graph: a random bipartite cubic graph in
/// which two edges `a1 b1`, `a2 b2` are replaced by `a1 a2` and `b1 b2`.
/// Returns the graph and the two surplus edges; rejects results that are
/// bipartite or have a bridge.
pub fn random_almost_bipartite(n: usize, seed: u64) -> Result<(CubicGraph, EdgeId, EdgeId)> {
    check_even_order(n)?;
    if n < 6 {
        return Err(Error::BadParameter("order must be at least 6".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let base = random_bipartite_cubic(n, rng.gen())?;
        let m = base.size();
        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
        let (a1, b1) = base.ends(i);
        let (a2, b2) = base.ends(j);
        if a1 == a2 || b1 == b2 {
            continue;
        }
        let mut edges: Vec<(Vertex, Vertex)> =
            base.edge_list().iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &p)| p).collect();
        edges.push((a1, a2));
        edges.push((b1, b2));
        let g = CubicGraph::from_edges(n, &edges)?;
        if g.find_bridge().is_some() || g.bipartition().is_some() {
            continue;
        }
        let m = g.size();
        return Ok((g, m - 2, m - 1));
    }
}

/// Named test corpus: every built-in graph up to 28 vertices.
pub fn corpus() -> Vec<(String, CubicGraph)> {
    let mut out = vec![
        ("k4".to_string(), k4()),
        ("k33".to_string(), k33()),
        ("prism".to_string(), prism3()),
        ("q3".to_string(), cube_q3()),
        ("petersen".to_string(), petersen()),
        ("heawood".to_string(), heawood()),
        ("join-k33".to_string(), petersen_join(&k33(), 0).unwrap()),
        ("join-q3".to_string(), petersen_join(&cube_q3(), 0).unwrap()),
        ("join-heawood".to_string(), petersen_join(&heawood(), 0).unwrap()),
    ];
    let [d1, d2] = petersen_dot_products();
    out.push(("petersen-dot-1".to_string(), d1));
    out.push(("petersen-dot-2".to_string(), d2));
    out.push(("flower-5".to_string(), flower_snark(5).unwrap()));
    out.push(("flower-7".to_string(), flower_snark(7).unwrap()));
    out
}

/// The Petersen part and the bipartite part of a [`petersen_join`] graph.
pub fn petersen_join_parts(g: &CubicGraph) -> (Subgraph<'_>, Subgraph<'_>) {
    let p: Vec<Vertex> = (0..9).collect();
    let b: Vec<Vertex> = (9..g.order()).collect();
    (Subgraph::induced(g, &p), Subgraph::induced(g, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::girth;

    #[test]
    fn named_graph_shapes() {
        let p = petersen();
        assert_eq!((p.order(), p.size(), girth(&p)), (10, 15, Some(5)));
        assert!(cube_q3().bipartition().is_some());
        assert_eq!(cube_q3().order(), 8);
        let d = dipole3();
        assert_eq!((d.order(), d.size()), (2, 3));
        assert_eq!(girth(&heawood()), Some(6));
        assert!(heawood().bipartition().is_some());
    }

    #[test]
    fn hexagons_are_induced_six_cycles() {
        for (g, hex) in [(petersen(), PETERSEN_HEXAGON), (cube_q3(), q3_hexagon())] {
            for i in 0..6 {
                assert!(g.are_adjacent(hex[i], hex[(i + 1) % 6]));
            }
            let h = Subgraph::induced(&g, &hex);
            assert_eq!(h.size(), 6);
        }
    }

    #[test]
    fn flower_parameters() {
        assert_eq!(flower_snark(7).unwrap().order(), 28);
        assert!(flower_snark(4).is_err());
        assert!(flower_snark(3).is_err());
    }

    #[test]
    fn petersen_join_shapes() {
        let (g, joins) = petersen_join_with_pairing(&k33(), 0, [0, 1, 2]).unwrap();
        assert_eq!(g.order(), 14);
        let cut = crate::graph::edge_cut(&g, &(0..9).collect::<Vec<_>>()).unwrap();
        assert_eq!(cut.edges, joins.to_vec());
        assert!(cut.is_independent(&g));
        assert_eq!(petersen_join(&cube_q3(), 0).unwrap().order(), 16);
        assert_eq!(petersen_join(&petersen(), 0).unwrap_err(), Error::NotBipartite);
        assert!(petersen_join_with_pairing(&k33(), 0, [0, 0, 1]).is_err());
    }

    #[test]
    fn random_generators_are_reproducible() {
        let a = random_bridgeless_cubic(10, 1).unwrap();
        assert_eq!(a, random_bridgeless_cubic(10, 1).unwrap());
        assert!(a.find_bridge().is_none() && !a.has_loop());
        assert!(random_bridgeless_cubic(4, 3).is_ok());
        assert!(random_bridgeless_cubic(5, 1).is_err());
        let s = random_bridgeless_simple_cubic(12, 7).unwrap();
        assert!(s.is_simple());
        let (g, e, f) = random_almost_bipartite(12, 5).unwrap();
        let rest = Subgraph::whole(&g).without_edges(&[e, f]);
        assert!(rest.bipartition().is_some());
        assert!(g.bipartition().is_none());
    }

    #[test]
    fn dot_products_are_cubic_of_order_18() {
        for g in petersen_dot_products() {
            assert_eq!(g.order(), 18);
            assert!(g.find_bridge().is_none());
        }
    }
}
