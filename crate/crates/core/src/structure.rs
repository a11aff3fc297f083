//! Bipartite index, almost bipartite graphs and oddness.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, EdgeColouring3};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, EdgeId, Graph, Subgraph};
use crate::matching::{enumerate_perfect_matchings, pm_containing, PerfectMatching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteIndexResult {
    pub value: usize,
    pub deleted: Vec<EdgeId>,
    /// `side[v]` for the bipartition of `G` minus the deleted edges.
    pub side: Vec<bool>,
}

impl BipartiteIndexResult {
    /// The deleted edges are exactly the edges with both ends on one side.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut inside: Vec<EdgeId> = (0..g.size())
            .filter(|&e| {
                let (u, v) = g.ends(e);
                self.side[u] == self.side[v]
            })
            .collect();
        inside.sort_unstable();
        let mut deleted = self.deleted.clone();
        deleted.sort_unstable();
        inside == deleted && deleted.len() == self.value
    }
}

/// Shortest odd closed walk of `h`, as its edge set; `None` when `h` is
/// bipartite.
fn short_odd_walk(h: &Subgraph<'_>) -> Option<Vec<EdgeId>> {
    let g = h.parent();
    let n = g.order();
    let mut best: Option<Vec<EdgeId>> = None;
    for r in h.vertices() {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[r] = 0;
        let mut queue = VecDeque::from([r]);
        let mut hit = None;
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some(b) = &best {
                if 2 * dist[v] + 1 >= b.len() {
                    break;
                }
            }
            for e in h.incident(v) {
                let w = g.other_end(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else if dist[w] == dist[v] && e != via[v] {
                    hit = Some((e, v, w));
                    break 'bfs;
                }
            }
        }
        if let Some((e, x, y)) = hit {
            let mut walk = vec![e];
            for mut v in [x, y] {
                while v != r {
                    walk.push(via[v]);
                    v = g.other_end(via[v], v);
                }
            }
            walk.sort_unstable();
            walk.dedup();
            if best.as_ref().is_none_or(|b| walk.len() < b.len()) {
                best = Some(walk);
            }
        }
    }
    best
}

fn hit_odd_walks(h: &Subgraph<'_>, left: usize, deleted: &mut Vec<EdgeId>) -> bool {
    let Some(walk) = short_odd_walk(h) else { return true };
    if left == 0 {
        return false;
    }
    for e in walk {
        deleted.push(e);
        if hit_odd_walks(&h.without_edges(&[e]), left - 1, deleted) {
            return true;
        }
        deleted.pop();
    }
    false
}

/// Exact bipartite index: iterative deepening on the deletion budget,
/// branching on the edges of a shortest odd closed walk, which every
/// bipartizing edge set must meet.
pub fn bipartite_index(g: &Graph) -> Result<BipartiteIndexResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let whole = Subgraph::whole(g);
    for k in 0..=g.size() {
        let mut deleted = Vec::new();
        if hit_odd_walks(&whole, k, &mut deleted) {
            let side = whole.without_edges(&deleted).bipartition().ok_or_else(|| {
                Error::Internal("deletion set does not leave a bipartite graph".into())
            })?;
            // surplus edges whose ends were split across components are not needed
            let mut deleted: Vec<EdgeId> = deleted
                .into_iter()
                .filter(|&e| {
                    let (u, v) = g.ends(e);
                    side[u] == side[v]
                })
                .collect();
            deleted.sort_unstable();
            return Ok(BipartiteIndexResult { value: deleted.len(), deleted, side });
        }
    }
    Err(Error::Internal("deleting every edge leaves a bipartite graph".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlmostBipartiteWitness {
    /// Surplus edge with both ends in `A`.
    pub e: EdgeId,
    /// Surplus edge with both ends in `B`.
    pub f: EdgeId,
    /// `in_b[v]` is true for the vertices of `B`.
    pub in_b: Vec<bool>,
}

impl AlmostBipartiteWitness {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: &str| Err(Error::WitnessInvalid(msg.into()));
        if self.in_b.len() != g.order() || self.e >= g.size() || self.f >= g.size() || self.e == self.f {
            return bad("malformed witness");
        }
        for id in 0..g.size() {
            let (u, v) = g.ends(id);
            let same = self.in_b[u] == self.in_b[v];
            if id == self.e {
                if !same || self.in_b[u] {
                    return bad("surplus edge e does not lie inside A");
                }
            } else if id == self.f {
                if !same || !self.in_b[u] {
                    return bad("surplus edge f does not lie inside B");
                }
            } else if same {
                return bad("remainder is not bipartite with the given parts");
            }
        }
        Ok(())
    }
}

/// Surplus edges `e, f` with `G − {e, f}` bipartite, tried in lexicographic
/// order of edge-id pairs. `None` unless `g` is bridgeless and not bipartite.
pub fn almost_bipartite_witness(g: &CubicGraph) -> Option<AlmostBipartiteWitness> {
    if !g.is_connected() || g.find_bridge().is_some() || g.bipartition().is_some() {
        return None;
    }
    let whole = Subgraph::whole(g);
    for e in 0..g.size() {
        for f in e + 1..g.size() {
            let rest = whole.without_edges(&[e, f]);
            let Some(mut side) = rest.bipartition() else { continue };
            let (a, b) = (g.ends(e), g.ends(f));
            if side[a.0] != side[a.1] || side[b.0] != side[b.1] {
                continue;
            }
            if side[a.0] == side[b.0] {
                let comp = rest.components().into_iter().find(|c| c.contains_vertex(b.0)).expect("component");
                if comp.contains_vertex(a.0) {
                    continue;
                }
                for v in comp.vertices() {
                    side[v] = !side[v];
                }
            }
            if side[a.0] {
                for s in side.iter_mut() {
                    *s = !*s;
                }
            }
            return Some(AlmostBipartiteWitness { e, f, in_b: side });
        }
    }
    None
}

/// 3-edge-colouring of an almost bipartite graph: colour 1 on a perfect
/// matching through both surplus edges, colours 2 and 3 alternating on the
/// even circuits of the complementary 2-factor.
pub fn colour_almost_bipartite(g: &CubicGraph, w: &AlmostBipartiteWitness) -> Result<EdgeColouring3> {
    w.validate(g)?;
    let m = pm_containing(g, &[w.e, w.f])?
        .ok_or_else(|| Error::Internal("no perfect matching contains both surplus edges".into()))?;
    let mut col = EdgeColouring3::empty(g.size());
    for &e in m.edges() {
        col.set(e, Some(Colour::One));
    }
    let factor = Subgraph::whole(g).without_edges(m.edges());
    for circuit in factor.components() {
        let start = circuit.vertices().next().expect("nonempty");
        let (mut v, mut prev, mut colour) = (start, usize::MAX, Colour::Two);
        loop {
            let e = circuit.incident(v).find(|&e| e != prev).expect("2-regular");
            if col.get(e).is_some() {
                break;
            }
            col.set(e, Some(colour));
            colour = if colour == Colour::Two { Colour::Three } else { Colour::Two };
            prev = e;
            v = g.other_end(e, v);
        }
    }
    if !col.is_proper(g) {
        return Err(Error::Internal("complementary 2-factor has an odd circuit".into()));
    }
    Ok(col)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddnessResult {
    pub value: usize,
    /// The 2-factor is the complement of this perfect matching.
    pub matching: PerfectMatching,
    pub circuit_lengths: Vec<usize>,
}

/// Circuit lengths of the 2-factor `G − M`, sorted.
pub fn two_factor_circuits(g: &Graph, m: &PerfectMatching) -> Vec<usize> {
    let mut lengths: Vec<usize> =
        Subgraph::whole(g).without_edges(m.edges()).components().iter().map(|c| c.order()).collect();
    lengths.sort_unstable();
    lengths
}

/// Minimum number of odd circuits over the complements of all perfect
/// matchings.
pub fn oddness(g: &CubicGraph, pm_cap: usize) -> Result<OddnessResult> {
    g.require_bridgeless()?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let mut best: Option<OddnessResult> = None;
    for m in pms {
        let circuit_lengths = two_factor_circuits(g, &m);
        let value = circuit_lengths.iter().filter(|&&l| l % 2 == 1).count();
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(OddnessResult { value, matching: m, circuit_lengths });
            if value == 0 {
                break;
            }
        }
    }
    best.ok_or_else(|| Error::Internal("bridgeless cubic graph without a perfect matching".into()))
}
