//! Cycle-separating cuts and cyclic edge connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge_cut, minimal_cyclic_vertex_sets, EdgeCut, EdgeId, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicConnectivity {
    pub value: usize,
    pub cycle_rank: usize,
    /// A minimum cycle-separating cut, present when `value < cycle_rank`.
    pub witness: Option<EdgeCut>,
}

/// Cyclic edge connectivity, capped by the cycle rank.
///
/// Every side of a cycle-separating cut contains the vertex set of a chordless
/// circuit (or a loop / parallel pair), so minimising the unit-capacity min
/// cut over all vertex-disjoint pairs of such sets is exact.
pub fn cyclic_edge_connectivity(g: &Graph) -> Result<CyclicConnectivity> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycle_rank = g.cycle_rank();
    let sets = minimal_cyclic_vertex_sets(g);
    let masks: Vec<Vec<bool>> = sets
        .iter()
        .map(|s| {
            let mut m = vec![false; g.order()];
            for &v in s {
                m[v] = true;
            }
            m
        })
        .collect();
    let mut best = cycle_rank;
    let mut witness = None;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[j].iter().any(|&v| masks[i][v]) {
                continue;
            }
            if let Some(cut) = min_cut_below(g, &masks[i], &masks[j], best) {
                best = cut.len();
                witness = Some(cut);
                if best == 0 {
                    break;
                }
            }
        }
    }
    Ok(CyclicConnectivity { value: best, cycle_rank, witness })
}

/// True if removing `cut` leaves two components that both contain a circuit.
pub fn is_cycle_separating(g: &Graph, cut: &EdgeCut) -> bool {
    let h = crate::graph::Subgraph::whole(g).without_edges(&cut.edges);
    h.components().iter().filter(|c| c.size() >= c.order()).count() >= 2
}

/// Minimum edge cut separating vertex sets `a` and `b` if its size is below
/// `limit`; the returned side is the residual-reachable closure of `a`.
pub fn min_cut_below(g: &Graph, a: &[bool], b: &[bool], limit: usize) -> Option<EdgeCut> {
    // flow[e] = +1 means one unit from ends(e).0 to ends(e).1
    let mut flow = vec![0i8; g.size()];
    let mut value = 0;
    loop {
        let (reached, parent) = residual_search(g, a, &flow);
        let Some(t) = (0..g.order()).find(|&v| b[v] && reached[v]) else {
            break;
        };
        value += 1;
        if value >= limit {
            return None;
        }
        let mut v = t;
        while let Some(e) = parent[v] {
            let (x, y) = g.ends(e);
            let prev = if x == v { y } else { x };
            flow[e] += if prev == x { 1 } else { -1 };
            v = prev;
        }
    }
    let (reached, _) = residual_search(g, a, &flow);
    let side: Vec<Vertex> = (0..g.order()).filter(|&v| reached[v]).collect();
    let cut = edge_cut(g, &side).ok()?;
    debug_assert_eq!(cut.len(), value);
    Some(cut)
}

fn residual_search(g: &Graph, a: &[bool], flow: &[i8]) -> (Vec<bool>, Vec<Option<EdgeId>>) {
    let n = g.order();
    let mut reached = a.to_vec();
    let mut parent = vec![None; n];
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| a[v]).collect();
    while let Some(v) = queue.pop_front() {
        for &e in g.incident(v) {
            let (x, y) = g.ends(e);
            if x == y {
                continue;
            }
            let (w, forward) = if x == v { (y, true) } else { (x, false) };
            let can = if forward { flow[e] < 1 } else { flow[e] > -1 };
            if can && !reached[w] {
                reached[w] = true;
                parent[w] = Some(e);
                queue.push_back(w);
            }
        }
    }
    (reached, parent)
}
