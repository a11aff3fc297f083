//! Proper 3-edge-colourings, Kempe chains, the Parity Lemma, and colour
//! vectors on the six boundary edges of a hexagon together with their types.
//!
//! Colours are identified with the nonzero elements of Z2 × Z2 by their bit
//! patterns `1 = 01`, `2 = 10`, `3 = 11`, so the group sum is XOR.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arrays::HexCoreCertificate;
use crate::error::{Error, Result};
use crate::graph::{EdgeCut, EdgeId, Graph, Subgraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Colour {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::One, Colour::Two, Colour::Three];

    pub fn from_u8(c: u8) -> Option<Colour> {
        match c {
            1 => Some(Colour::One),
            2 => Some(Colour::Two),
            3 => Some(Colour::Three),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        1 << (self as u8 - 1)
    }

    /// The remaining colour, given two distinct ones.
    pub fn third(a: Colour, b: Colour) -> Colour {
        debug_assert_ne!(a, b);
        Colour::from_u8(a as u8 ^ b as u8).expect("distinct colours")
    }
}

impl From<Colour> for u8 {
    fn from(c: Colour) -> u8 {
        c as u8
    }
}

impl TryFrom<u8> for Colour {
    type Error = String;
    fn try_from(c: u8) -> std::result::Result<Self, String> {
        Colour::from_u8(c).ok_or_else(|| format!("colour {c} is not in 1..=3"))
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", *self as u8)
    }
}

/// A partial map from edge ids to colours. Serialises as `[[edge, colour], ...]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(EdgeId, Colour)>", from = "Vec<(EdgeId, Colour)>")]
pub struct EdgeColouring3 {
    colours: Vec<Option<Colour>>,
}

impl EdgeColouring3 {
    pub fn empty(m: usize) -> Self {
        EdgeColouring3 { colours: vec![None; m] }
    }

    pub fn get(&self, e: EdgeId) -> Option<Colour> {
        self.colours.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, c: Option<Colour>) {
        if e >= self.colours.len() {
            self.colours.resize(e + 1, None);
        }
        self.colours[e] = c;
    }

    pub fn coloured_edges(&self) -> impl Iterator<Item = (EdgeId, Colour)> + '_ {
        self.colours.iter().enumerate().filter_map(|(e, c)| c.map(|c| (e, c)))
    }

    pub fn class(&self, c: Colour) -> Vec<EdgeId> {
        self.coloured_edges().filter(|&(_, d)| d == c).map(|(e, _)| e).collect()
    }

    /// No two equally coloured edges share a vertex and no loop is coloured.
    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut used = vec![0u8; g.order()];
        for (e, c) in self.coloured_edges() {
            if e >= g.size() || g.is_loop(e) {
                return false;
            }
            let (u, v) = g.ends(e);
            for x in [u, v] {
                if used[x] & c.bit() != 0 {
                    return false;
                }
                used[x] |= c.bit();
            }
        }
        true
    }

    /// Proper, and colours exactly the edges of `h`.
    pub fn is_proper_colouring_of(&self, h: &Subgraph<'_>) -> bool {
        self.is_proper(h.parent())
            && (0..h.parent().size()).all(|e| h.contains_edge(e) == self.get(e).is_some())
    }
}

impl From<EdgeColouring3> for Vec<(EdgeId, Colour)> {
    fn from(c: EdgeColouring3) -> Self {
        c.coloured_edges().collect()
    }
}

impl From<Vec<(EdgeId, Colour)>> for EdgeColouring3 {
    fn from(pairs: Vec<(EdgeId, Colour)>) -> Self {
        let mut col = EdgeColouring3::default();
        for (e, c) in pairs {
            col.set(e, Some(c));
        }
        col
    }
}

struct Search<'a> {
    g: &'a Graph,
    edges: Vec<EdgeId>,
    colour: Vec<u8>,
    used: Vec<u8>,
}

impl Search<'_> {
    fn available(&self, e: EdgeId) -> u8 {
        let (u, v) = self.g.ends(e);
        !(self.used[u] | self.used[v]) & 7
    }

    fn assign(&mut self, e: EdgeId, bit: u8) {
        let (u, v) = self.g.ends(e);
        self.colour[e] = bit;
        self.used[u] |= bit;
        self.used[v] |= bit;
    }

    fn unassign(&mut self, e: EdgeId) {
        let (u, v) = self.g.ends(e);
        let bit = self.colour[e];
        self.colour[e] = 0;
        self.used[u] &= !bit;
        self.used[v] &= !bit;
    }

    fn snapshot(&self) -> EdgeColouring3 {
        let mut col = EdgeColouring3::empty(self.g.size());
        for &e in &self.edges {
            col.set(e, Colour::from_u8(self.colour[e].trailing_zeros() as u8 + 1));
        }
        col
    }

    fn run<F>(&mut self, first: bool, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&EdgeColouring3) -> ControlFlow<()>,
    {
        let mut pick = None;
        let mut best = 4;
        for &e in &self.edges {
            if self.colour[e] == 0 {
                let k = self.available(e).count_ones();
                if k < best {
                    best = k;
                    pick = Some(e);
                    if k == 0 {
                        break;
                    }
                }
            }
        }
        let Some(e) = pick else {
            return visit(&self.snapshot());
        };
        let mut avail = self.available(e);
        if first {
            // colour permutations act transitively on the first choice
            avail &= 1;
        }
        for bit in [1u8, 2, 4] {
            if avail & bit != 0 {
                self.assign(e, bit);
                let flow = self.run(false, visit);
                self.unassign(e);
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` on every proper 3-edge-colouring of `h` extending
/// `constraints`, in a deterministic order. Without constraints only
/// colourings whose first branching edge has colour 1 are visited, one per
/// orbit of colour permutations on that edge.
pub fn for_each_colouring<F>(h: &Subgraph<'_>, constraints: &[(EdgeId, Colour)], mut visit: F) -> Result<()>
where
    F: FnMut(&EdgeColouring3) -> ControlFlow<()>,
{
    let g = h.parent();
    let edges: Vec<EdgeId> = h.edges().collect();
    if edges.iter().any(|&e| g.is_loop(e)) {
        return Ok(());
    }
    let mut s = Search { g, edges, colour: vec![0; g.size()], used: vec![0; g.order()] };
    for &(e, c) in constraints {
        if !h.contains_edge(e) {
            return Err(Error::InvalidEdge(e));
        }
        if s.colour[e] != 0 {
            if s.colour[e] != c.bit() {
                return Err(Error::ConstraintConflict { edge: e });
            }
            continue;
        }
        if s.available(e) & c.bit() == 0 {
            return Err(Error::ConstraintConflict { edge: e });
        }
        s.assign(e, c.bit());
    }
    let _ = s.run(constraints.is_empty(), &mut visit);
    Ok(())
}

/// A proper 3-edge-colouring of `h` extending `constraints`, or `None` when
/// none exists. The search is exhaustive.
pub fn find_3_edge_colouring(h: &Subgraph<'_>, constraints: &[(EdgeId, Colour)]) -> Result<Option<EdgeColouring3>> {
    let mut found = None;
    for_each_colouring(h, constraints, |c| {
        found = Some(c.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn is_3_edge_colourable(g: &Graph) -> bool {
    matches!(find_3_edge_colouring(&Subgraph::whole(g), &[]), Ok(Some(_)))
}

/// All colourings of `h` extending `constraints` (up to the symmetry noted
/// on [`for_each_colouring`]); errors past `cap`.
pub fn all_colourings(h: &Subgraph<'_>, constraints: &[(EdgeId, Colour)], cap: usize) -> Result<Vec<EdgeColouring3>> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_colouring(h, constraints, |c| {
        if out.len() == cap {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    if over {
        return Err(Error::CapExceeded { cap });
    }
    Ok(out)
}

/// Parity Lemma: each colour occurs on the cut as often, mod 2, as the cut
/// has edges.
pub fn parity_check(col: &EdgeColouring3, cut: &EdgeCut) -> Result<bool> {
    let mut count = [0usize; 4];
    for &e in &cut.edges {
        let c = col.get(e).ok_or(Error::UncolouredEdgeInCut { edge: e })?;
        count[c as usize] += 1;
    }
    Ok(count[1..].iter().all(|k| k % 2 == cut.len() % 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    Circuit,
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempeChain {
    pub colours: (Colour, Colour),
    /// Edges in walk order. A path is listed from one end to the other.
    pub edges: Vec<EdgeId>,
    pub kind: ChainKind,
}

impl KempeChain {
    /// The ends of a path chain (vertices of the first and last edge not
    /// shared with a neighbour in the chain).
    pub fn path_ends(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        if self.kind != ChainKind::Path {
            return None;
        }
        let walk = walk_vertices(g, &self.edges);
        Some((walk[0], *walk.last().unwrap()))
    }
}

fn walk_vertices(g: &Graph, edges: &[EdgeId]) -> Vec<Vertex> {
    let (a, b) = g.ends(edges[0]);
    let start = match edges.get(1) {
        Some(&next) => {
            let (c, d) = g.ends(next);
            if a == c || a == d {
                b
            } else {
                a
            }
        }
        None => a,
    };
    let mut out = vec![start];
    let mut v = start;
    for &e in edges {
        v = g.other_end(e, v);
        out.push(v);
    }
    out
}

fn next_in_chain(g: &Graph, col: &EdgeColouring3, at: Vertex, from: EdgeId, want: Colour) -> Option<EdgeId> {
    g.incident(at).iter().copied().find(|&f| f != from && col.get(f) == Some(want))
}

/// The maximal `(i, j)`-alternating walk through `start`.
pub fn kempe_chain(g: &Graph, col: &EdgeColouring3, start: EdgeId, colours: (Colour, Colour)) -> Result<KempeChain> {
    let (i, j) = colours;
    let c0 = col.get(start).ok_or(Error::StartColourMismatch)?;
    if i == j || (c0 != i && c0 != j) {
        return Err(Error::StartColourMismatch);
    }
    let swap = |c: Colour| if c == i { j } else { i };
    let (a, b) = g.ends(start);
    // forward from b
    let mut forward = Vec::new();
    let (mut v, mut e, mut c) = (b, start, c0);
    loop {
        let Some(f) = next_in_chain(g, col, v, e, swap(c)) else { break };
        if f == start {
            return Ok(KempeChain { colours, edges: [vec![start], forward].concat(), kind: ChainKind::Circuit });
        }
        forward.push(f);
        v = g.other_end(f, v);
        e = f;
        c = swap(c);
    }
    let mut backward = Vec::new();
    let (mut v, mut e, mut c) = (a, start, c0);
    while let Some(f) = next_in_chain(g, col, v, e, swap(c)) {
        backward.push(f);
        v = g.other_end(f, v);
        e = f;
        c = swap(c);
    }
    backward.reverse();
    backward.push(start);
    backward.extend(forward);
    Ok(KempeChain { colours, edges: backward, kind: ChainKind::Path })
}

/// Interchanges the two colours on `chain`.
pub fn kempe_switch(g: &Graph, col: &EdgeColouring3, chain: &KempeChain) -> Result<EdgeColouring3> {
    let first = *chain.edges.first().ok_or(Error::StaleChain)?;
    let current = kempe_chain(g, col, first, chain.colours).map_err(|_| Error::StaleChain)?;
    let mut a = current.edges.clone();
    let mut b = chain.edges.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b || current.kind != chain.kind {
        return Err(Error::StaleChain);
    }
    let (i, j) = chain.colours;
    let mut out = col.clone();
    for &e in &chain.edges {
        let c = col.get(e).expect("chain edges are coloured");
        out.set(e, Some(if c == i { j } else { i }));
    }
    Ok(out)
}

/// Six colours `c0..c5` whose Z2 × Z2 sum vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct ColourVector(pub(crate) [Colour; 6]);

impl ColourVector {
    pub fn new(cs: [Colour; 6]) -> Result<Self> {
        let sum = cs.iter().fold(0u8, |s, &c| s ^ c as u8);
        if sum != 0 {
            let s: String = cs.iter().map(|c| c.to_string()).collect();
            return Err(Error::ParityViolation(s));
        }
        Ok(ColourVector(cs))
    }

    pub fn colours(&self) -> [Colour; 6] {
        self.0
    }

    pub fn uses_all_colours(&self) -> bool {
        Colour::ALL.iter().all(|c| self.0.contains(c))
    }

    pub fn permuted(&self, p: &[Colour; 3]) -> ColourVector {
        ColourVector(self.0.map(|c| p[c as usize - 1]))
    }
}

impl fmt::Display for ColourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ColourVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cs: Vec<Colour> = s
            .bytes()
            .map(|b| Colour::from_u8(b.wrapping_sub(b'0')))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::BadParameter(format!("bad colour vector {s:?}")))?;
        let cs: [Colour; 6] =
            cs.try_into().map_err(|_| Error::BadParameter(format!("colour vector {s:?} needs six colours")))?;
        ColourVector::new(cs)
    }
}

impl From<ColourVector> for String {
    fn from(v: ColourVector) -> String {
        v.to_string()
    }
}

impl TryFrom<String> for ColourVector {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The six permutations of the colours, as images of `1, 2, 3`.
pub const PERMUTATIONS: [[Colour; 3]; 6] = {
    use Colour::*;
    [
        [One, Two, Three],
        [One, Three, Two],
        [Two, One, Three],
        [Two, Three, One],
        [Three, One, Two],
        [Three, Two, One],
    ]
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TypeClass {
    B,
    C,
    P,
    #[serde(rename = "missing-colour")]
    MissingColour,
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeClass::B => "B",
            TypeClass::C => "C",
            TypeClass::P => "P",
            TypeClass::MissingColour => "missing-colour",
        })
    }
}

/// The fifteen all-colour types in lexicographic order with their classes.
pub const TABLE: [(&str, TypeClass); 15] = [
    ("112233", TypeClass::P),
    ("112323", TypeClass::P),
    ("112332", TypeClass::C),
    ("121233", TypeClass::P),
    ("121323", TypeClass::B),
    ("121332", TypeClass::P),
    ("122133", TypeClass::C),
    ("122313", TypeClass::P),
    ("122331", TypeClass::P),
    ("123123", TypeClass::C),
    ("123132", TypeClass::B),
    ("123213", TypeClass::B),
    ("123231", TypeClass::P),
    ("123312", TypeClass::P),
    ("123321", TypeClass::C),
];

/// Canonical representative of a colour vector under colour permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColouringType {
    #[serde(rename = "type")]
    pub canonical: ColourVector,
    pub class: TypeClass,
}

impl fmt::Display for ColouringType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical)
    }
}

pub fn canonical_type(v: &ColourVector) -> ColouringType {
    let canonical = PERMUTATIONS.iter().map(|p| v.permuted(p)).min().expect("six permutations");
    let class = if canonical.uses_all_colours() {
        let s = canonical.to_string();
        TABLE.iter().find(|(t, _)| *t == s).map(|&(_, c)| c).expect("fifteen all-colour types")
    } else {
        TypeClass::MissingColour
    };
    ColouringType { canonical, class }
}

/// The fifteen all-colour types, generated from scratch and classified.
pub fn enumerate_types() -> Vec<ColouringType> {
    let mut set = BTreeSet::new();
    for code in 0..729u32 {
        let mut cs = [Colour::One; 6];
        let mut x = code;
        for c in cs.iter_mut().rev() {
            *c = Colour::ALL[(x % 3) as usize];
            x /= 3;
        }
        if let Ok(v) = ColourVector::new(cs) {
            if v.uses_all_colours() {
                set.insert(canonical_type(&v));
            }
        }
    }
    set.into_iter().collect()
}

pub fn types_of_class(class: TypeClass) -> BTreeSet<ColouringType> {
    enumerate_types().into_iter().filter(|t| t.class == class).collect()
}

pub fn colour_vector_of(col: &EdgeColouring3, ordered_cut: &[EdgeId; 6]) -> Result<ColourVector> {
    let mut cs = [Colour::One; 6];
    for (c, &e) in cs.iter_mut().zip(ordered_cut) {
        *c = col.get(e).ok_or(Error::UncolouredEdgeInCut { edge: e })?;
    }
    ColourVector::new(cs).map_err(|e| Error::Internal(format!("proper colouring violated parity: {e}")))
}

/// Every canonical colour vector (all-colour or not), lexicographically.
fn canonical_vectors() -> Vec<ColourVector> {
    let mut set = BTreeSet::new();
    for code in 0..729u32 {
        let mut cs = [Colour::One; 6];
        let mut x = code;
        for c in cs.iter_mut().rev() {
            *c = Colour::ALL[(x % 3) as usize];
            x /= 3;
        }
        if let Ok(v) = ColourVector::new(cs) {
            set.insert(canonical_type(&v).canonical);
        }
    }
    set.into_iter().collect()
}

/// Types realised on `boundary` by proper 3-edge-colourings of `h`. Each
/// canonical vector is tested by an exhaustive constrained search, which
/// covers every colouring since types are permutation classes.
pub fn boundary_types(h: &Subgraph<'_>, boundary: &[EdgeId; 6]) -> Result<BTreeSet<ColouringType>> {
    let mut out = BTreeSet::new();
    for v in canonical_vectors() {
        let constraints: Vec<(EdgeId, Colour)> = boundary.iter().copied().zip(v.colours()).collect();
        match find_3_edge_colouring(h, &constraints) {
            Ok(Some(_)) => {
                out.insert(canonical_type(&v));
            }
            Ok(None) | Err(Error::ConstraintConflict { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `H⁺ = G − E(C)`: every vertex of `C` keeps only its cut edge, so it acts
/// as a degree-1 terminal.
pub fn h_plus<'a>(g: &'a Graph, c: &HexCoreCertificate) -> Subgraph<'a> {
    Subgraph::whole(g).without_edges(&c.core_edges)
}

/// Types admissible for `H⁺` with respect to `f0..f5`.
pub fn admissible_types(g: &Graph, c: &HexCoreCertificate) -> Result<BTreeSet<ColouringType>> {
    boundary_types(&h_plus(g, c), &c.cut_edges)
}

/// `C⁺`: a hexagon `v0..v5` (vertices 0..5, `e_i = v_i v_{i+1}` with id `i`)
/// with pendant edges `f_i` (id `6 + i`) to distinct terminals `6 + i`.
pub fn c_plus() -> (Graph, [EdgeId; 6]) {
    let mut edges: Vec<(Vertex, Vertex)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.extend((0..6).map(|i| (i, 6 + i)));
    let g = Graph::from_edges(12, &edges).expect("valid edges");
    (g, [6, 7, 8, 9, 10, 11])
}

/// Types admissible for `C⁺`; independent of the host graph.
pub fn core_side_types() -> BTreeSet<ColouringType> {
    let (g, f) = c_plus();
    boundary_types(&Subgraph::whole(&g), &f).expect("fixed small graph")
}
