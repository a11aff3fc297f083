//! Covers of the edge set by perfect matchings: the perfect matching index,
//! Berge covers of defect-3 graphs, covers built from circuit cores, and the
//! auxiliary graph `H♯` used to rule out 4-covers near a hexagonal core.

use serde::{Deserialize, Serialize};

use crate::arrays::{
    circuit_order, defect_from, full_mask, hexagonal_core_certificate, require_bitset, HexCoreCertificate, ThreeArray,
};
use crate::colouring::{find_3_edge_colouring, Colour};
use crate::cuts::cyclic_edge_connectivity;
use crate::error::{Error, Result};
use crate::families::petersen;
use crate::graph::{girth, CubicGraph, EdgeId, Graph, Subgraph, Vertex};
use crate::matching::{enumerate_perfect_matchings, has_perfect_matching, pm_containing, PerfectMatching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BergeCover {
    pub matchings: Vec<PerfectMatching>,
}

impl BergeCover {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Every member is a perfect matching and together they cover `E(G)`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let h = Subgraph::whole(g);
        let mut covered = vec![false; g.size()];
        for (i, m) in self.matchings.iter().enumerate() {
            if !m.is_perfect_in(&h) {
                return Err(Error::WitnessInvalid(format!("member {i} is not a perfect matching")));
            }
            for &e in m.edges() {
                covered[e] = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(e) => Err(Error::WitnessInvalid(format!("edge {e} is not covered"))),
            None => Ok(()),
        }
    }
}

/// Exact search for at most `k` matchings from `pms` covering every edge.
/// Branches on the uncovered edge lying in the fewest matchings, trying
/// those matchings in index order; returns the indices of the first cover
/// found.
pub fn set_cover(g: &Graph, pms: &[PerfectMatching], k: usize) -> Result<Option<Vec<usize>>> {
    require_bitset(g)?;
    let masks: Vec<u128> = pms.iter().map(|p| p.mask()).collect();
    let containing: Vec<Vec<usize>> =
        (0..g.size()).map(|e| (0..masks.len()).filter(|&i| masks[i] >> e & 1 == 1).collect()).collect();
    let full = full_mask(g.size());
    let per = (g.order() / 2) as u32;
    let mut chosen = Vec::new();
    let found = cover_rec(&masks, &containing, full, 0, k, per, &mut chosen);
    Ok(found.then_some(chosen))
}

fn cover_rec(
    masks: &[u128],
    containing: &[Vec<usize>],
    full: u128,
    covered: u128,
    left: usize,
    per: u32,
    chosen: &mut Vec<usize>,
) -> bool {
    let missing = full & !covered;
    if missing == 0 {
        return true;
    }
    if left == 0 || missing.count_ones() > per * left as u32 {
        return false;
    }
    let mut pick = None;
    let mut fewest = usize::MAX;
    let mut rest = missing;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if containing[e].len() < fewest {
            fewest = containing[e].len();
            pick = Some(e);
        }
    }
    let Some(e) = pick else { return false };
    for &i in &containing[e] {
        chosen.push(i);
        if cover_rec(masks, containing, full, covered | masks[i], left - 1, per, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PmiMethod {
    /// Colour classes of a 3-edge-colouring.
    Colouring,
    /// Exact set cover over all perfect matchings.
    SetCover,
    /// Optimal 3-array, a fourth matching through two uncovered core edges,
    /// and a fifth through the last one.
    DefectThree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmiResult {
    pub value: usize,
    pub cover: BergeCover,
    /// Covers of size `value - 1` were excluded exhaustively.
    pub exhaustive: bool,
    pub method: PmiMethod,
    pub pm_count: Option<usize>,
}

/// The perfect matching index.
pub fn pmi(g: &CubicGraph, pm_cap: usize) -> Result<PmiResult> {
    g.require_bridgeless()?;
    require_bitset(g)?;
    if let Some(col) = find_3_edge_colouring(&Subgraph::whole(g), &[])? {
        let matchings = Colour::ALL.iter().map(|&c| PerfectMatching::new(col.class(c))).collect();
        let cover = BergeCover { matchings };
        cover.validate(g)?;
        // two perfect matchings cover at most n of the 3n/2 edges
        return Ok(PmiResult { value: 3, cover, exhaustive: true, method: PmiMethod::Colouring, pm_count: None });
    }
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let pm_count = Some(pms.len());
    let from_indices = |idx: Vec<usize>| BergeCover { matchings: idx.into_iter().map(|i| pms[i].clone()).collect() };
    // three matchings covering everything would be a 3-edge-colouring
    if let Some(idx) = set_cover(g, &pms, 4)? {
        let cover = from_indices(idx);
        cover.validate(g)?;
        return Ok(PmiResult { value: cover.len(), cover, exhaustive: true, method: PmiMethod::SetCover, pm_count });
    }
    let d = defect_from(g, &pms)?;
    if d.value == 3 {
        let cover = berge_cover_from(g, &d.witness)?;
        return Ok(PmiResult { value: cover.len(), cover, exhaustive: true, method: PmiMethod::DefectThree, pm_count });
    }
    for k in 5..=pms.len() {
        if let Some(idx) = set_cover(g, &pms, k)? {
            let cover = from_indices(idx);
            cover.validate(g)?;
            return Ok(PmiResult { value: k, cover, exhaustive: true, method: PmiMethod::SetCover, pm_count });
        }
    }
    Err(Error::NoCoverFound(format!(
        "{} perfect matchings do not cover the edge set of a bridgeless cubic graph with edges {:?}",
        pms.len(),
        g.edge_list()
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourthMatching {
    pub matching: PerfectMatching,
    /// Index `j` of the path `e_j e_{j+1} e_{j+2}` whose end edges it contains.
    pub path_start: usize,
}

/// A perfect matching through two of the three uncovered hexagon edges.
/// Paths `e_j e_{j+1} e_{j+2}` starting at an uncovered edge are tried in
/// the order `j = 3, 5, 1` (shifted by one for the rotated labelling); the
/// remaining graph `G - V(P)` is matched and the two end edges added.
pub fn fourth_matching(g: &Graph, c: &HexCoreCertificate) -> Result<FourthMatching> {
    c.validate(g)?;
    let positions = c.uncovered_positions();
    let order = [positions[1], positions[2], positions[0]];
    for j in order {
        let path: Vec<Vertex> = (0..4).map(|k| c.vertices[(j + k) % 6]).collect();
        let rest = Subgraph::whole(g).without_vertices(&path);
        if let Some(pm) = has_perfect_matching(&rest) {
            let mut edges = pm.edges().to_vec();
            edges.push(c.core_edges[j]);
            edges.push(c.core_edges[(j + 2) % 6]);
            let matching = PerfectMatching::new(edges);
            if !matching.is_perfect_in(&Subgraph::whole(g)) {
                return Err(Error::Internal("extended matching is not perfect".into()));
            }
            return Ok(FourthMatching { matching, path_start: j });
        }
    }
    Err(Error::NoFourthMatching(format!("hexagon {:?}", c.vertices)))
}

/// A Berge cover of a defect-3 graph: an optimal 3-array, a fourth matching
/// through two of its uncovered edges, and a fifth through the last.
pub fn berge_cover_defect3(g: &CubicGraph, pm_cap: usize) -> Result<BergeCover> {
    g.require_bridgeless()?;
    require_bitset(g)?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let d = defect_from(g, &pms)?;
    if d.value != 3 {
        return Err(Error::PreconditionDefectNot3 { found: d.value });
    }
    berge_cover_from(g, &d.witness)
}

fn berge_cover_from(g: &Graph, a: &ThreeArray) -> Result<BergeCover> {
    let cert = crate::arrays::certificate_from_array(g, a)?;
    let m4 = fourth_matching(g, &cert)?;
    let mut matchings = a.matchings.to_vec();
    let left: Vec<EdgeId> = cert.uncovered_edges().into_iter().filter(|&e| !m4.matching.contains(e)).collect();
    matchings.push(m4.matching);
    for e in left {
        let m5 = pm_containing(g, &[e])?
            .ok_or_else(|| Error::Internal(format!("edge {e} lies in no perfect matching")))?;
        matchings.push(m5);
    }
    let cover = BergeCover { matchings };
    cover.validate(g)?;
    Ok(cover)
}

/// Cover of size at most `3 + ⌈d/4⌉` from an array whose core is a single
/// circuit of length `d`: each extra matching contains the two uncovered
/// ends of a 3-edge path of the core with a doubly covered middle edge.
pub fn cover_circuit_core(g: &CubicGraph, a: &ThreeArray) -> Result<BergeCover> {
    let cc = cyclic_edge_connectivity(g)?;
    if cc.value < 4 {
        return Err(Error::PreconditionViolated(format!("cyclic edge connectivity is {}", cc.value)));
    }
    let core = a.core(g);
    let (verts, mut order) = circuit_order(g, &core.edges)
        .ok_or_else(|| Error::PreconditionViolated("core is not a single circuit".into()))?;
    let d = order.len();
    if d % 2 == 1 || d < 6 || !core.triply.is_empty() {
        return Err(Error::PreconditionViolated(format!("core circuit of length {d}")));
    }
    let mut verts = verts;
    let phi = a.phi(g);
    if phi.weight(order[0]) != 0 {
        order.rotate_left(1);
        verts.rotate_left(1);
    }
    if (0..d).any(|i| (phi.weight(order[i]) == 0) != (i % 2 == 0)) {
        return Err(Error::PreconditionViolated("core does not alternate uncovered and doubly covered edges".into()));
    }
    let mut starts: Vec<usize> = (0..d / 4).map(|j| 4 * j).collect();
    if (d / 2) % 2 == 1 {
        starts.push(d - 2);
    }
    let mut matchings = a.matchings.to_vec();
    for s in starts {
        let path: Vec<Vertex> = (0..4).map(|k| verts[(s + k) % d]).collect();
        let rest = Subgraph::whole(g).without_vertices(&path);
        let pm = has_perfect_matching(&rest).ok_or_else(|| {
            Error::CorePathMatchingFailed(format!("no perfect matching avoids the path through {path:?}"))
        })?;
        let mut edges = pm.edges().to_vec();
        edges.push(order[s]);
        edges.push(order[(s + 2) % d]);
        matchings.push(PerfectMatching::new(edges));
    }
    let cover = BergeCover { matchings };
    cover.validate(g)?;
    Ok(cover)
}

/// The cubic graph obtained from `H⁺ = G − E(C)` by deleting `f2, f5`,
/// adding `e = u2u5`, merging `v0, v1` into `s` and `v3, v4` into `t`, and
/// adding `f = st`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSharpGraph {
    pub graph: CubicGraph,
    pub s: Vertex,
    pub t: Vertex,
    pub e: EdgeId,
    pub f: EdgeId,
    /// New id of each old vertex; `s` and `t` for the merged ones, `None`
    /// for `v2` and `v5`.
    pub vertex_map: Vec<Option<Vertex>>,
    /// New id of each surviving old edge.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl HSharpGraph {
    /// Bipartition of `H♯ − {e, f}`, if it is bipartite.
    pub fn bipartition_without_new_edges(&self) -> Option<Vec<bool>> {
        Subgraph::whole(&self.graph).without_edges(&[self.e, self.f]).bipartition()
    }
}

/// Builds `H♯` for the labelling of `c` shifted by `shift` steps, so that
/// the antipodal pair used for `e` is `(u_{2+shift}, u_{5+shift})`.
pub fn build_h_sharp(g: &CubicGraph, c: &HexCoreCertificate, shift: usize) -> Result<HSharpGraph> {
    c.validate(g)?;
    let mut c = c.clone();
    for _ in 0..shift % 3 {
        c = c.rotated();
    }
    if c.outer[2] == c.outer[5] {
        return Err(Error::CoincidentEndpoints);
    }
    let on_c = |v: Vertex| c.vertices.contains(&v);
    let mut vertex_map = vec![None; g.order()];
    let mut next = 0;
    for v in 0..g.order() {
        if !on_c(v) {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let (s, t) = (next, next + 1);
    vertex_map[c.vertices[0]] = Some(s);
    vertex_map[c.vertices[1]] = Some(s);
    vertex_map[c.vertices[3]] = Some(t);
    vertex_map[c.vertices[4]] = Some(t);
    let mut h = Graph::new(next + 2);
    let mut edge_map = vec![None; g.size()];
    for (id, &(a, b)) in g.edge_list().iter().enumerate() {
        if c.core_edges.contains(&id) || id == c.cut_edges[2] || id == c.cut_edges[5] {
            continue;
        }
        let (x, y) = (vertex_map[a].expect("kept"), vertex_map[b].expect("kept"));
        edge_map[id] = Some(h.add_edge(x, y)?);
    }
    let u2 = vertex_map[c.outer[2]].expect("outer vertex kept");
    let u5 = vertex_map[c.outer[5]].expect("outer vertex kept");
    let e = h.add_edge(u2, u5)?;
    let f = h.add_edge(s, t)?;
    let graph = CubicGraph::new(h)?;
    Ok(HSharpGraph { graph, s, t, e, f, vertex_map, edge_map })
}

/// An isomorphism onto [`petersen`] (`map[v]` is the image of `v`), found by
/// backtracking after checking order, size, simplicity and girth.
pub fn petersen_isomorphism(g: &Graph) -> Option<Vec<Vertex>> {
    if g.order() != 10 || g.size() != 15 || !g.is_simple() || girth(g) != Some(5) {
        return None;
    }
    let p = petersen();
    let mut map = vec![usize::MAX; 10];
    let mut used = [false; 10];
    iso_rec(g, &p, 0, &mut map, &mut used).then_some(map)
}

fn iso_rec(g: &Graph, p: &Graph, v: Vertex, map: &mut [usize], used: &mut [bool; 10]) -> bool {
    if v == 10 {
        return true;
    }
    for w in 0..10 {
        if used[w] {
            continue;
        }
        let ok = (0..v).all(|x| g.are_adjacent(v, x) == p.are_adjacent(w, map[x]));
        if ok {
            map[v] = w;
            used[w] = true;
            if iso_rec(g, p, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    map[v] = usize::MAX;
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FourCoverVerdict {
    FourCover { cover: BergeCover },
    Petersen { isomorphism: Vec<Vertex> },
    /// Neither outcome: a cyclically 4-edge-connected defect-3 graph with no
    /// 4-cover that is not the Petersen graph.
    Counterexample { edges: Vec<(Vertex, Vertex)>, pm_count: usize, certificate: Box<HexCoreCertificate> },
}

/// For a cyclically 4-edge-connected graph of defect 3: a cover by four
/// perfect matchings, or an isomorphism to the Petersen graph.
pub fn four_cover_or_petersen(g: &CubicGraph, pm_cap: usize) -> Result<FourCoverVerdict> {
    g.require_bridgeless()?;
    let cc = cyclic_edge_connectivity(g)?;
    if cc.value < 4 {
        return Err(Error::PreconditionViolated(format!("cyclic edge connectivity is {}", cc.value)));
    }
    let outcome = hexagonal_core_certificate(g, pm_cap)?;
    let Some(certificate) = outcome.certificate else {
        return Err(Error::PreconditionViolated(format!("defect is {}", outcome.defect.value)));
    };
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    if let Some(idx) = set_cover(g, &pms, 4)? {
        let cover = BergeCover { matchings: idx.into_iter().map(|i| pms[i].clone()).collect() };
        cover.validate(g)?;
        return Ok(FourCoverVerdict::FourCover { cover });
    }
    if let Some(isomorphism) = petersen_isomorphism(g) {
        return Ok(FourCoverVerdict::Petersen { isomorphism });
    }
    Ok(FourCoverVerdict::Counterexample {
        edges: g.edge_list().to_vec(),
        pm_count: pms.len(),
        certificate: Box::new(certificate),
    })
}
