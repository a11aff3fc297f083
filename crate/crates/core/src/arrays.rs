//! 3-arrays of perfect matchings, the colouring φ and characteristic flow χ
//! they induce, cores, the colouring defect, and hexagonal-core certificates.

use serde::{Deserialize, Serialize};

use crate::colouring::{find_3_edge_colouring, Colour, EdgeColouring3};
use crate::error::{Error, Result};
use crate::graph::{circuits_of_length, CubicGraph, EdgeId, Graph, Subgraph, Vertex};
use crate::matching::{enumerate_perfect_matchings, PerfectMatching};

/// Largest edge count handled by the bitset searches.
pub const MAX_BITSET_EDGES: usize = 128;

pub(crate) fn require_bitset(g: &Graph) -> Result<()> {
    if g.size() > MAX_BITSET_EDGES {
        return Err(Error::TooLarge { what: "edge count", limit: MAX_BITSET_EDGES });
    }
    Ok(())
}

pub(crate) fn full_mask(m: usize) -> u128 {
    if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThreeArray {
    pub matchings: [PerfectMatching; 3],
}

impl ThreeArray {
    pub fn new(g: &Graph, matchings: [PerfectMatching; 3]) -> Result<Self> {
        let h = Subgraph::whole(g);
        for (i, m) in matchings.iter().enumerate() {
            if !m.is_perfect_in(&h) {
                return Err(Error::WitnessInvalid(format!("member {} is not a perfect matching", i + 1)));
            }
        }
        Ok(ThreeArray { matchings })
    }

    /// Per-edge bitmask: bit `i` set when the edge lies in `M_{i+1}`.
    fn membership(&self, m: usize) -> Vec<u8> {
        let mut out = vec![0u8; m];
        for (i, pm) in self.matchings.iter().enumerate() {
            for &e in pm.edges() {
                out[e] |= 1 << i;
            }
        }
        out
    }

    pub fn phi(&self, g: &Graph) -> PhiColouring {
        PhiColouring { sets: self.membership(g.size()) }
    }

    pub fn chi(&self, g: &Graph) -> CharFlow {
        CharFlow { values: self.membership(g.size()).into_iter().map(|s| !s & 7).collect() }
    }

    pub fn uncovered(&self, g: &Graph) -> Vec<EdgeId> {
        self.phi(g).edges_of_weight(0)
    }

    pub fn core(&self, g: &Graph) -> Core {
        let phi = self.phi(g);
        let edges: Vec<EdgeId> = (0..g.size()).filter(|&e| phi.weight(e) != 1).collect();
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&e| [g.ends(e).0, g.ends(e).1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Core {
            vertices,
            edges,
            uncovered: phi.edges_of_weight(0),
            doubly: phi.edges_of_weight(2),
            triply: phi.edges_of_weight(3),
        }
    }
}

/// `φ(e)`: the set of indices `i` with `e ∈ M_i`, stored as a 3-bit mask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiColouring {
    sets: Vec<u8>,
}

impl PhiColouring {
    pub fn from_sets(sets: Vec<u8>) -> Self {
        PhiColouring { sets }
    }

    pub fn mask(&self, e: EdgeId) -> u8 {
        self.sets[e]
    }

    pub fn colours(&self, e: EdgeId) -> Vec<Colour> {
        Colour::ALL.into_iter().filter(|c| self.sets[e] & c.bit() != 0).collect()
    }

    pub fn weight(&self, e: EdgeId) -> usize {
        self.sets[e].count_ones() as usize
    }

    pub fn edges_of_weight(&self, w: usize) -> Vec<EdgeId> {
        (0..self.sets.len()).filter(|&e| self.weight(e) == w).collect()
    }

    /// Every colour occurs exactly once around every vertex.
    pub fn is_array_colouring(&self, g: &Graph) -> bool {
        (0..g.order()).all(|v| {
            let mut seen = 0u8;
            for &e in g.incident(v) {
                if seen & self.sets[e] != 0 {
                    return false;
                }
                seen |= self.sets[e];
            }
            seen == 7
        })
    }

    /// Adjacent edges receive different lists.
    pub fn is_proper(&self, g: &Graph) -> bool {
        (0..g.order()).all(|v| {
            let inc = g.incident(v);
            (0..inc.len()).all(|i| (i + 1..inc.len()).all(|j| inc[i] == inc[j] || self.sets[inc[i]] != self.sets[inc[j]]))
        }) && (0..g.size()).all(|e| !g.is_loop(e))
    }

    pub fn to_chi(&self) -> CharFlow {
        CharFlow { values: self.sets.iter().map(|s| !s & 7).collect() }
    }
}

/// `χ(e) ∈ Z2³` with coordinate `i` zero exactly when `e ∈ M_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharFlow {
    values: Vec<u8>,
}

impl CharFlow {
    pub fn value(&self, e: EdgeId) -> u8 {
        self.values[e]
    }

    /// Kirchhoff's law at every vertex; a loop contributes twice.
    pub fn is_flow(&self, g: &Graph) -> bool {
        (0..g.order()).all(|v| g.incident(v).iter().fold(0u8, |s, &e| s ^ self.values[e]) == 0)
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&x| x != 0)
    }

    pub fn to_phi(&self) -> PhiColouring {
        PhiColouring { sets: self.values.iter().map(|x| !x & 7).collect() }
    }
}

/// Edges of weight other than 1 and the vertices they touch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Core {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub uncovered: Vec<EdgeId>,
    pub doubly: Vec<EdgeId>,
    pub triply: Vec<EdgeId>,
}

impl Core {
    pub fn subgraph<'a>(&self, g: &'a Graph) -> Subgraph<'a> {
        Subgraph::from_parts(g, &self.vertices, &self.edges).expect("core edges lie on core vertices")
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoTriplyReport {
    pub no_triply_covered: bool,
    pub phi_proper: bool,
    pub chi_nowhere_zero: bool,
}

impl NoTriplyReport {
    pub fn consistent(&self) -> bool {
        self.no_triply_covered == self.phi_proper && self.phi_proper == self.chi_nowhere_zero
    }
}

/// Evaluates the three equivalent conditions on triply covered edges.
pub fn check_no_triply(g: &Graph, a: &ThreeArray) -> NoTriplyReport {
    let phi = a.phi(g);
    NoTriplyReport {
        no_triply_covered: phi.edges_of_weight(3).is_empty(),
        phi_proper: phi.is_proper(g),
        chi_nowhere_zero: a.chi(g).is_nowhere_zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectResult {
    pub value: usize,
    pub witness: ThreeArray,
    pub uncovered: Vec<EdgeId>,
    pub pm_count: usize,
}

/// Minimum number of edges left uncovered by three perfect matchings,
/// searched exhaustively over all triples. The witness is the first optimal
/// triple `i ≤ j ≤ k` in lexicographic order of matching indices.
pub fn defect(g: &CubicGraph, pm_cap: usize) -> Result<DefectResult> {
    g.require_bridgeless()?;
    require_bitset(g)?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    defect_from(g, &pms)
}

pub(crate) fn defect_from(g: &Graph, pms: &[PerfectMatching]) -> Result<DefectResult> {
    if pms.is_empty() {
        return Err(Error::Internal("bridgeless cubic graph without a perfect matching".into()));
    }
    let masks: Vec<u128> = pms.iter().map(|p| p.mask()).collect();
    let half = g.order() / 2;
    let m = g.size();
    let mut best_cov = 0u32;
    let mut best = (0, 0, 0);
    'outer: for i in 0..masks.len() {
        for j in i..masks.len() {
            let ij = masks[i] | masks[j];
            if ij.count_ones() as usize + half <= best_cov as usize {
                continue;
            }
            for k in j..masks.len() {
                let cov = (ij | masks[k]).count_ones();
                if cov > best_cov {
                    best_cov = cov;
                    best = (i, j, k);
                    if cov as usize == m {
                        break 'outer;
                    }
                }
            }
        }
    }
    let witness = ThreeArray::new(g, [pms[best.0].clone(), pms[best.1].clone(), pms[best.2].clone()])?;
    let uncovered = witness.uncovered(g);
    Ok(DefectResult { value: uncovered.len(), witness, uncovered, pm_count: pms.len() })
}

/// Every optimal 3-array, one per multiset of perfect matchings.
pub fn optimal_arrays(g: &CubicGraph, pm_cap: usize) -> Result<Vec<ThreeArray>> {
    g.require_bridgeless()?;
    require_bitset(g)?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let d = defect_from(g, &pms)?;
    optimal_triples(g, &pms, d.value)
        .into_iter()
        .map(|(i, j, k)| ThreeArray::new(g, [pms[i].clone(), pms[j].clone(), pms[k].clone()]))
        .collect()
}

/// Every optimal 3-array, as index triples `i ≤ j ≤ k` into `pms`.
pub(crate) fn optimal_triples(g: &Graph, pms: &[PerfectMatching], value: usize) -> Vec<(usize, usize, usize)> {
    let masks: Vec<u128> = pms.iter().map(|p| p.mask()).collect();
    let target = (g.size() - value) as u32;
    let mut out = Vec::new();
    for i in 0..masks.len() {
        for j in i..masks.len() {
            let ij = masks[i] | masks[j];
            for k in j..masks.len() {
                if (ij | masks[k]).count_ones() == target {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoreComponentKind {
    EvenCircuit { length: usize },
    Subdivision { branch_vertices: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreComponent {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    #[serde(flatten)]
    pub kind: CoreComponentKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    pub components: Vec<CoreComponent>,
}

/// Checks the structure of an optimal core: each component is an even
/// circuit of length at least 6 or a subdivision of a cubic graph, and the
/// edges of weight at least 2 form a perfect matching of the core.
pub fn check_core_structure(g: &Graph, a: &ThreeArray) -> Result<CoreReport> {
    let core = a.core(g);
    let phi = a.phi(g);
    let h = core.subgraph(g);
    for &v in &core.vertices {
        let heavy = h.incident(v).filter(|&e| phi.weight(e) >= 2).count();
        if heavy != 1 {
            return Err(Error::NotOptimalEvidence(format!(
                "core vertex {v} meets {heavy} edges of weight at least 2"
            )));
        }
    }
    let mut components = Vec::new();
    for comp in h.components() {
        let vertices: Vec<Vertex> = comp.vertices().collect();
        let edges: Vec<EdgeId> = comp.edges().collect();
        let degrees: Vec<usize> = vertices.iter().map(|&v| comp.degree(v)).collect();
        if degrees.iter().any(|&d| d != 2 && d != 3) {
            return Err(Error::NotOptimalEvidence(format!("core component at {} has a vertex of degree 1", vertices[0])));
        }
        let branch = degrees.iter().filter(|&&d| d == 3).count();
        let kind = if branch == 0 {
            let length = edges.len();
            if length % 2 == 1 || length < 6 {
                return Err(Error::NotOptimalEvidence(format!("core circuit of length {length}")));
            }
            CoreComponentKind::EvenCircuit { length }
        } else {
            CoreComponentKind::Subdivision { branch_vertices: branch }
        };
        components.push(CoreComponent { vertices, edges, kind });
    }
    Ok(CoreReport { components })
}

/// The edges of a circuit core in cyclic order, starting with the lowest
/// vertex and heading to its smaller core neighbour.
pub fn circuit_order(g: &Graph, edges: &[EdgeId]) -> Option<(Vec<Vertex>, Vec<EdgeId>)> {
    let h_vertices = {
        let mut v: Vec<Vertex> = edges.iter().flat_map(|&e| [g.ends(e).0, g.ends(e).1]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let h = Subgraph::from_parts(g, &h_vertices, edges).ok()?;
    if h.components().len() != 1 || h_vertices.iter().any(|&v| h.degree(v) != 2) {
        return None;
    }
    let start = h_vertices[0];
    let first = h.incident(start).min_by_key(|&e| (g.other_end(e, start), e))?;
    let mut verts = vec![start];
    let mut order = vec![first];
    let mut v = g.other_end(first, start);
    let mut prev = first;
    while v != start {
        verts.push(v);
        let next = h.incident(v).find(|&e| e != prev)?;
        order.push(next);
        v = g.other_end(next, v);
        prev = next;
    }
    Some((verts, order))
}

/// Which of the two accepted labellings a certificate uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Labelling {
    /// `φ(f0)=φ(f1)`, `φ(f2)=φ(f3)`, `φ(f4)=φ(f5)`; `e1, e3, e5` uncovered.
    Base,
    /// The same pattern shifted one step; `e0, e2, e4` uncovered.
    Rotated,
}

/// An induced hexagon `C` with `e_i = v_i v_{i+1}`, cut edge `f_i = v_i u_i`,
/// and a 3-edge-colouring of `G − E(C)` inducing the pattern `1,1,2,2,3,3`
/// around `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexCoreCertificate {
    pub vertices: [Vertex; 6],
    pub core_edges: [EdgeId; 6],
    pub cut_edges: [EdgeId; 6],
    pub outer: [Vertex; 6],
    pub colouring: EdgeColouring3,
}

impl HexCoreCertificate {
    /// Assembles the certificate around the cyclic vertex order `vs`.
    pub fn from_hexagon(g: &Graph, vs: [Vertex; 6], colouring: EdgeColouring3) -> Result<Self> {
        let mut core_edges = [0; 6];
        let mut cut_edges = [0; 6];
        let mut outer = [0; 6];
        for i in 0..6 {
            core_edges[i] = g
                .edge_between(vs[i], vs[(i + 1) % 6])
                .ok_or_else(|| Error::WitnessInvalid(format!("v{i} and v{} are not adjacent", (i + 1) % 6)))?;
        }
        for i in 0..6 {
            let f = g
                .incident(vs[i])
                .iter()
                .copied()
                .find(|e| !core_edges.contains(e))
                .ok_or_else(|| Error::WitnessInvalid(format!("v{i} has no cut edge")))?;
            cut_edges[i] = f;
            outer[i] = g.other_end(f, vs[i]);
        }
        Ok(HexCoreCertificate { vertices: vs, core_edges, cut_edges, outer, colouring })
    }

    pub fn validate(&self, g: &Graph) -> Result<Labelling> {
        let bad = |s: String| Err(Error::WitnessInvalid(s));
        let mut vs = self.vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != 6 || vs.iter().any(|&v| v >= g.order()) {
            return bad("hexagon vertices are not six distinct vertices".into());
        }
        let on_c = |v: Vertex| self.vertices.contains(&v);
        for i in 0..6 {
            let e = self.core_edges[i];
            let f = self.cut_edges[i];
            if e >= g.size() || f >= g.size() {
                return bad(format!("edge id out of range at position {i}"));
            }
            let (a, b) = g.ends(e);
            let (x, y) = (self.vertices[i], self.vertices[(i + 1) % 6]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return bad(format!("e{i} does not join v{i} and v{}", (i + 1) % 6));
            }
            let (p, q) = g.ends(f);
            let v = self.vertices[i];
            if !((p == v && q == self.outer[i]) || (q == v && p == self.outer[i])) || on_c(self.outer[i]) {
                return bad(format!("f{i} does not join v{i} to an outer vertex u{i}"));
            }
        }
        // induced: every vertex of C has exactly two edges into C
        for &v in &self.vertices {
            if g.incident(v).iter().filter(|&&e| on_c(g.other_end(e, v)) && !g.is_loop(e)).count() != 2 {
                return bad(format!("hexagon is not induced at {v}"));
            }
        }
        let h_plus = Subgraph::whole(g).without_edges(&self.core_edges);
        if !self.colouring.is_proper_colouring_of(&h_plus) {
            return bad("colouring is not a proper 3-edge-colouring of G - E(C)".into());
        }
        let c: Vec<Colour> = self.cut_edges.iter().map(|&f| self.colouring.get(f).expect("coloured")).collect();
        let pattern_at = |s: usize| {
            let pairs = [(s, s + 1), (s + 2, s + 3), (s + 4, s + 5)].map(|(a, b)| (c[a % 6], c[b % 6]));
            pairs.iter().all(|(x, y)| x == y) && pairs[0].0 != pairs[1].0 && pairs[1].0 != pairs[2].0 && pairs[0].0 != pairs[2].0
        };
        if pattern_at(0) {
            Ok(Labelling::Base)
        } else if pattern_at(1) {
            Ok(Labelling::Rotated)
        } else {
            bad("cut edges are not coloured 1,1,2,2,3,3 around C".into())
        }
    }

    /// Indices `i` of the uncovered edges `e_i`: those between differently
    /// coloured cut edges.
    pub fn uncovered_positions(&self) -> Vec<usize> {
        (0..6)
            .filter(|&i| self.colouring.get(self.cut_edges[i]) != self.colouring.get(self.cut_edges[(i + 1) % 6]))
            .collect()
    }

    pub fn uncovered_edges(&self) -> Vec<EdgeId> {
        self.uncovered_positions().into_iter().map(|i| self.core_edges[i]).collect()
    }

    /// The 3-array read off the certificate: colour classes of the colouring,
    /// with each doubly covered hexagon edge added to both colour classes
    /// missing at its ends.
    pub fn to_array(&self, g: &Graph) -> Result<ThreeArray> {
        let mut classes: [Vec<EdgeId>; 3] = Default::default();
        for (e, c) in self.colouring.coloured_edges() {
            classes[c as usize - 1].push(e);
        }
        for i in 0..6 {
            let a = self.colouring.get(self.cut_edges[i]);
            let b = self.colouring.get(self.cut_edges[(i + 1) % 6]);
            if let (Some(a), Some(b)) = (a, b) {
                if a == b {
                    for c in Colour::ALL.into_iter().filter(|&c| c != a) {
                        classes[c as usize - 1].push(self.core_edges[i]);
                    }
                }
            }
        }
        let [m1, m2, m3] = classes.map(PerfectMatching::new);
        ThreeArray::new(g, [m1, m2, m3])
    }

    /// Shifts the labels one step so that `v_i` becomes `v_{i-1}`.
    pub fn rotated(&self) -> Self {
        let rot = |a: [usize; 6]| std::array::from_fn(|i| a[(i + 1) % 6]);
        HexCoreCertificate {
            vertices: rot(self.vertices),
            core_edges: rot(self.core_edges),
            cut_edges: rot(self.cut_edges),
            outer: rot(self.outer),
            colouring: self.colouring.clone(),
        }
    }
}

/// Builds the certificate from an array whose core is a hexagon, labelled so
/// that the uncovered edges are `e1, e3, e5`.
pub fn certificate_from_array(g: &Graph, a: &ThreeArray) -> Result<HexCoreCertificate> {
    let core = a.core(g);
    let (verts, order) = circuit_order(g, &core.edges)
        .filter(|(v, _)| v.len() == 6)
        .ok_or_else(|| Error::WitnessInvalid("core is not a hexagon".into()))?;
    let phi = a.phi(g);
    let shift = if phi.weight(order[0]) == 2 { 0 } else { 1 };
    let vs: [Vertex; 6] = std::array::from_fn(|i| verts[(i + shift) % 6]);
    let mut colouring = EdgeColouring3::empty(g.size());
    for e in 0..g.size() {
        if phi.weight(e) == 1 {
            colouring.set(e, Colour::from_u8(phi.mask(e).trailing_zeros() as u8 + 1));
        }
    }
    HexCoreCertificate::from_hexagon(g, vs, colouring)
}

/// Searches induced hexagons for a colouring of `G − E(C)` with the pattern
/// `1,1,2,2,3,3`, independently of any perfect matching enumeration.
pub fn hexagon_by_colouring(g: &Graph) -> Result<Option<HexCoreCertificate>> {
    for cyc in circuits_of_length(g, 6) {
        let vs: [Vertex; 6] = cyc.clone().try_into().expect("hexagon");
        let Ok(base) = HexCoreCertificate::from_hexagon(g, vs, EdgeColouring3::default()) else { continue };
        let induced = vs.iter().all(|&v| g.incident(v).iter().filter(|&&e| vs.contains(&g.other_end(e, v))).count() == 2);
        if !induced {
            continue;
        }
        let h_plus = Subgraph::whole(g).without_edges(&base.core_edges);
        for shift in 0..2 {
            let pattern = [1, 1, 2, 2, 3, 3];
            let constraints: Vec<(EdgeId, Colour)> = (0..6)
                .map(|i| (base.cut_edges[(i + shift) % 6], Colour::from_u8(pattern[i]).unwrap()))
                .collect();
            match find_3_edge_colouring(&h_plus, &constraints) {
                Ok(Some(colouring)) => {
                    let cert = HexCoreCertificate { colouring, ..base.clone() };
                    return Ok(Some(if shift == 0 { cert } else { cert.rotated() }));
                }
                Ok(None) | Err(Error::ConstraintConflict { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

/// The three characterisations of defect 3, evaluated separately; they are
/// equivalent for snarks only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexCoreEquivalence {
    pub snark: bool,
    pub defect_is_three: bool,
    pub optimal_cores_hexagonal: bool,
    pub optimal_arrays: usize,
    pub hexagon_colouring_exists: bool,
}

impl HexCoreEquivalence {
    pub fn consistent(&self) -> bool {
        !self.snark
            || (self.defect_is_three == self.optimal_cores_hexagonal
                && self.optimal_cores_hexagonal == self.hexagon_colouring_exists)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexCoreOutcome {
    pub defect: DefectResult,
    pub certificate: Option<HexCoreCertificate>,
    pub equivalence: HexCoreEquivalence,
}

/// A hexagonal-core certificate exactly when the defect is 3, together with
/// an independent evaluation of the three equivalent conditions.
pub fn hexagonal_core_certificate(g: &CubicGraph, pm_cap: usize) -> Result<HexCoreOutcome> {
    g.require_bridgeless()?;
    require_bitset(g)?;
    let pms = enumerate_perfect_matchings(g, pm_cap)?;
    let d = defect_from(g, &pms)?;
    let triples = optimal_triples(g, &pms, d.value);
    let hexagonal = |&(i, j, k): &(usize, usize, usize)| {
        let a = ThreeArray { matchings: [pms[i].clone(), pms[j].clone(), pms[k].clone()] };
        let core = a.core(g);
        core.edges.len() == 6 && circuit_order(g, &core.edges).is_some()
    };
    let equivalence = HexCoreEquivalence {
        snark: d.value > 0,
        defect_is_three: d.value == 3,
        optimal_cores_hexagonal: triples.iter().all(hexagonal),
        optimal_arrays: triples.len(),
        hexagon_colouring_exists: hexagon_by_colouring(g)?.is_some(),
    };
    if !equivalence.consistent() {
        return Err(Error::Internal(format!("defect-3 characterisations disagree: {equivalence:?}")));
    }
    let certificate = if d.value == 3 {
        let c = certificate_from_array(g, &d.witness)?;
        c.validate(g)?;
        Some(c)
    } else {
        None
    };
    Ok(HexCoreOutcome { defect: d, certificate, equivalence })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortCircuitReport {
    /// Triangles and quadrilaterals sharing an edge with the hexagon.
    pub checked: usize,
    pub violations: Vec<Vec<Vertex>>,
}

impl ShortCircuitReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every triangle or quadrilateral meeting the hexagon shares with it exactly
/// one edge, and that edge is uncovered.
pub fn check_short_circuits(g: &Graph, c: &HexCoreCertificate) -> ShortCircuitReport {
    let uncovered = c.uncovered_edges();
    let mut checked = 0;
    let mut violations = Vec::new();
    for len in [3, 4] {
        for cyc in circuits_of_length(g, len) {
            let shared: Vec<EdgeId> = (0..len)
                .filter_map(|i| {
                    let (a, b) = (cyc[i], cyc[(i + 1) % len]);
                    c.core_edges.iter().copied().find(|&e| {
                        let (x, y) = g.ends(e);
                        (x == a && y == b) || (x == b && y == a)
                    })
                })
                .collect();
            let touches = cyc.iter().any(|v| c.vertices.contains(v));
            if !touches {
                continue;
            }
            checked += 1;
            if shared.len() != 1 || !uncovered.contains(&shared[0]) {
                violations.push(cyc);
            }
        }
    }
    ShortCircuitReport { checked, violations }
}
