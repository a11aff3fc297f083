//! Witness checks that share no code with the searches producing them: only
//! the graph's edge list is taken from the core library.

use std::collections::VecDeque;

use pmcover::io::parse_cmg_any;
use pmcover::Graph;
use serde::Deserialize;
use serde_json::Value;

use crate::cert::{Certificate, Claim};

type Check = Result<(), String>;

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn field<'de, T: Deserialize<'de>>(w: &'de Value, key: &str) -> Result<T, String> {
    let v = w.get(key).ok_or_else(|| format!("witness lacks {key:?}"))?;
    T::deserialize(v).map_err(|e| format!("witness field {key:?}: {e}"))
}

fn value_usize(v: &Value) -> Result<usize, String> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| format!("expected a non-negative integer value, got {v}"))
}

fn ends(g: &Graph, e: usize) -> Result<(usize, usize), String> {
    if e >= g.size() {
        return fail(format!("edge {e} out of range"));
    }
    Ok(g.ends(e))
}

/// `edges` matches every vertex of `inside` exactly once and uses no other
/// vertex.
fn check_matching_on(g: &Graph, edges: &[usize], inside: &[bool]) -> Check {
    let mut hit = vec![0u8; g.order()];
    for &e in edges {
        let (u, v) = ends(g, e)?;
        if u == v || !inside[u] || !inside[v] {
            return fail(format!("edge {e} is a loop or leaves the matched vertex set"));
        }
        hit[u] += 1;
        hit[v] += 1;
    }
    match (0..g.order()).find(|&v| inside[v] && hit[v] != 1) {
        Some(v) => fail(format!("vertex {v} is matched {} times", hit[v])),
        None => Ok(()),
    }
}

fn check_pm(g: &Graph, edges: &[usize]) -> Check {
    check_matching_on(g, edges, &vec![true; g.order()])
}

fn check_cover(g: &Graph, cover: &[Vec<usize>]) -> Check {
    let mut hit = vec![false; g.size()];
    for m in cover {
        check_pm(g, m)?;
        for &e in m {
            hit[e] = true;
        }
    }
    match hit.iter().position(|&h| !h) {
        Some(e) => fail(format!("edge {e} is not covered")),
        None => Ok(()),
    }
}

fn uncovered(g: &Graph, ms: &[Vec<usize>]) -> Vec<usize> {
    let mut hit = vec![false; g.size()];
    for m in ms {
        for &e in m {
            hit[e] = true;
        }
    }
    (0..g.size()).filter(|&e| !hit[e]).collect()
}

fn check_three_pms(g: &Graph, ms: &[Vec<usize>]) -> Check {
    if ms.len() != 3 {
        return fail(format!("expected 3 matchings, got {}", ms.len()));
    }
    ms.iter().try_for_each(|m| check_pm(g, m))
}

fn mask(n: usize, vs: &[usize]) -> Result<Vec<bool>, String> {
    let mut inside = vec![false; n];
    for &v in vs {
        if v >= n {
            return fail(format!("vertex {v} out of range"));
        }
        inside[v] = true;
    }
    Ok(inside)
}

fn cut_edges(g: &Graph, inside: &[bool]) -> Vec<usize> {
    (0..g.size())
        .filter(|&e| {
            let (u, v) = g.ends(e);
            inside[u] != inside[v]
        })
        .collect()
}

/// Connected components of the subgraph induced by `inside`.
fn components(g: &Graph, inside: &[bool]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !inside[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbours(v) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The induced subgraph has more edges than a forest on its vertices allows.
fn spans_cycle(g: &Graph, inside: &[bool]) -> bool {
    let edges = (0..g.size())
        .filter(|&e| {
            let (u, v) = g.ends(e);
            inside[u] && inside[v]
        })
        .count();
    let vertices = inside.iter().filter(|&&b| b).count();
    edges + components(g, inside).len() > vertices
}

fn check_defect(g: &Graph, value: usize, w: &Value) -> Check {
    let ms: Vec<Vec<usize>> = field(w, "matchings")?;
    check_three_pms(g, &ms)?;
    let missed = uncovered(g, &ms);
    if missed.len() != value {
        return fail(format!("matchings leave {} edges uncovered, claimed {value}", missed.len()));
    }
    Ok(())
}

fn check_cover_claim(g: &Graph, value: usize, w: &Value, max: Option<usize>) -> Check {
    let cover: Vec<Vec<usize>> = field(w, "cover")?;
    check_cover(g, &cover)?;
    if cover.len() != value {
        return fail(format!("cover has {} members, claimed {value}", cover.len()));
    }
    if let Some(max) = max {
        if value > max {
            return fail(format!("cover of size {value} exceeds {max}"));
        }
    }
    Ok(())
}

fn check_hex_core(g: &Graph, value: usize, w: &Value) -> Check {
    check_defect(g, value, w)?;
    let ms: Vec<Vec<usize>> = field(w, "matchings")?;
    let mut weight = vec![0; g.size()];
    for m in &ms {
        for &e in m {
            weight[e] += 1;
        }
    }
    let core: Vec<usize> = (0..g.size()).filter(|&e| weight[e] != 1).collect();
    let mut claimed: Vec<usize> = field(w, "core")?;
    claimed.sort_unstable();
    if claimed != core {
        return fail("claimed core differs from the edges not covered exactly once");
    }
    let hexagon: Option<Vec<usize>> = field(w, "hexagon")?;
    match (value, hexagon) {
        (3, Some(h)) => {
            if h.len() != 6 {
                return fail("hexagon must list 6 vertices");
            }
            let mut ring = Vec::new();
            for i in 0..6 {
                let (a, b) = (h[i], h[(i + 1) % 6]);
                let e = core
                    .iter()
                    .copied()
                    .find(|&e| {
                        let (u, v) = g.ends(e);
                        (u == a && v == b) || (u == b && v == a)
                    })
                    .ok_or_else(|| format!("hexagon vertices {a} and {b} are not joined by a core edge"))?;
                ring.push(e);
            }
            let mut sorted = ring.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted != core {
                return fail("core is not exactly the hexagon");
            }
            let zero: Vec<bool> = ring.iter().map(|&e| weight[e] == 0).collect();
            if !(0..6).all(|i| zero[i] != zero[(i + 1) % 6]) {
                return fail("uncovered and doubly covered edges do not alternate");
            }
            Ok(())
        }
        (3, None) => fail("defect 3 without a hexagon"),
        (_, None) => Ok(()),
        (_, Some(_)) => fail("hexagon given for a defect other than 3"),
    }
}

fn check_six_cut(g: &Graph, value: &Value, w: &Value) -> Check {
    let side: Vec<usize> = field(w, "side")?;
    let inside = mask(g.order(), &side)?;
    if cut_edges(g, &inside).len() != 6 {
        return fail("side does not define a 6-edge cut");
    }
    match value.as_str() {
        Some("perfect_matching") => {
            let m: Vec<usize> = field(w, "matching")?;
            check_matching_on(g, &m, &inside)
        }
        Some("barrier") => {
            let s: Vec<usize> = field(w, "s")?;
            let s_mask = mask(g.order(), &s)?;
            if s.iter().any(|&v| !inside[v]) {
                return fail("barrier vertex outside the side");
            }
            if s.iter().any(|&v| g.neighbours(v).any(|u| s_mask[u])) {
                return fail("barrier is not independent");
            }
            let rest: Vec<bool> = (0..g.order()).map(|v| inside[v] && !s_mask[v]).collect();
            let comps = components(g, &rest);
            let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
            if odd != s.len() + 2 {
                return fail(format!("{odd} odd components, expected {}", s.len() + 2));
            }
            for c in &comps {
                let cm = mask(g.order(), c)?;
                if cut_edges(g, &cm).len() != 3 {
                    return fail("a component is not joined to the rest by exactly 3 edges");
                }
            }
            let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
            if s.iter().any(|&v| g.neighbours(v).any(|u| outside[u])) {
                return fail("a cut edge meets the barrier");
            }
            Ok(())
        }
        _ => fail(format!("unknown six-cut outcome {value}")),
    }
}

fn check_bipartite_index(g: &Graph, value: usize, w: &Value) -> Check {
    let side: Vec<bool> = field(w, "side")?;
    let mut deleted: Vec<usize> = field(w, "deleted")?;
    if side.len() != g.order() {
        return fail("side has the wrong length");
    }
    deleted.sort_unstable();
    let same: Vec<usize> = (0..g.size())
        .filter(|&e| {
            let (u, v) = g.ends(e);
            side[u] == side[v]
        })
        .collect();
    if same != deleted || deleted.len() != value {
        return fail("deleted edges are not exactly the edges inside a side");
    }
    Ok(())
}

fn check_oddness(g: &Graph, value: usize, w: &Value) -> Check {
    let m: Vec<usize> = field(w, "matching")?;
    check_pm(g, &m)?;
    let rest: Vec<usize> = (0..g.size()).filter(|e| !m.contains(e)).collect();
    let mut seen = vec![false; g.order()];
    let mut odd = 0;
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            len += 1;
            for &e in &rest {
                let (a, b) = g.ends(e);
                let u = if a == v { b } else if b == v { a } else { continue };
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        odd += len % 2;
    }
    if odd != value {
        return fail(format!("complement has {odd} odd circuits, claimed {value}"));
    }
    Ok(())
}

fn check_cyclic(g: &Graph, value: usize, w: &Value) -> Check {
    let side: Option<Vec<usize>> = field(w, "side")?;
    match side {
        None => {
            if value + g.order() != g.size() + 1 {
                return fail("no cut given and the value is not the cycle rank");
            }
            Ok(())
        }
        Some(side) => {
            let inside = mask(g.order(), &side)?;
            let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
            if !spans_cycle(g, &inside) || !spans_cycle(g, &outside) {
                return fail("cut is not cycle-separating");
            }
            let size = cut_edges(g, &inside).len();
            if size != value {
                return fail(format!("cut has {size} edges, claimed {value}"));
            }
            Ok(())
        }
    }
}

fn petersen_edges() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..5 {
        out.push((i, (i + 1) % 5));
        out.push((i, i + 5));
        out.push((5 + i, 5 + (i + 2) % 5));
    }
    out
}

fn check_four_cover(g: &Graph, value: &Value, w: &Value) -> Check {
    match value.as_str() {
        Some("four_cover") => {
            let cover: Vec<Vec<usize>> = field(w, "cover")?;
            if cover.len() != 4 {
                return fail("four-cover verdict without four matchings");
            }
            check_cover(g, &cover)
        }
        Some("petersen") => {
            let map: Vec<usize> = field(w, "isomorphism")?;
            let mut image = map.clone();
            image.sort_unstable();
            if g.order() != 10 || g.size() != 15 || image != (0..10).collect::<Vec<_>>() {
                return fail("isomorphism is not a bijection onto 10 vertices");
            }
            let target = petersen_edges();
            let mut mapped: Vec<(usize, usize)> = g
                .edge_list()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (map[u], map[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            mapped.sort_unstable();
            let mut want: Vec<(usize, usize)> = target.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            want.sort_unstable();
            if mapped != want {
                return fail("map does not carry the edges onto the Petersen graph");
            }
            Ok(())
        }
        _ => fail(format!("verdict {value} is not verifiable")),
    }
}

fn check_join(g: &Graph, value: &Value, w: &Value) -> Check {
    let d = value.get("defect").map(value_usize).transpose()?.ok_or("value lacks defect")?;
    let p = value.get("pmi").map(value_usize).transpose()?.ok_or("value lacks pmi")?;
    let c = value.get("cyclic_connectivity").map(value_usize).transpose()?.ok_or("value lacks cyclic connectivity")?;
    let defect_w = w.get("defect").ok_or("witness lacks defect")?;
    check_defect(g, d, defect_w)?;
    let pmi_w = w.get("pmi").ok_or("witness lacks pmi")?;
    check_cover_claim(g, p, pmi_w, None)?;
    let cyc_w = w.get("cyclic_connectivity").ok_or("witness lacks cyclic connectivity")?;
    check_cyclic(g, c, cyc_w)?;
    let side: Vec<usize> = field(cyc_w, "side")?;
    let inside = mask(g.order(), &side)?;
    let cut = cut_edges(g, &inside);
    let independent = cut.iter().enumerate().all(|(i, &e)| {
        let (a, b) = g.ends(e);
        cut[i + 1..].iter().all(|&f| {
            let (x, y) = g.ends(f);
            a != x && a != y && b != x && b != y
        })
    });
    if !independent {
        return fail("3-edge-cut is not independent");
    }
    Ok(())
}

/// Re-checks the witness of `cert` against its claimed value.
pub fn validate(cert: &Certificate) -> Check {
    let g = parse_cmg_any(&cert.graph).map_err(|e| e.to_string())?;
    let (v, w) = (&cert.value, &cert.witness);
    match cert.claim {
        Claim::Defect => check_defect(&g, value_usize(v)?, w),
        Claim::Pmi => check_cover_claim(&g, value_usize(v)?, w, None),
        Claim::BergeCover | Claim::CoverDefect3 => check_cover_claim(&g, value_usize(v)?, w, Some(5)),
        Claim::HexCore => check_hex_core(&g, value_usize(v)?, w),
        Claim::SixCut => check_six_cut(&g, v, w),
        Claim::BipartiteIndex => check_bipartite_index(&g, value_usize(v)?, w),
        Claim::Oddness => check_oddness(&g, value_usize(v)?, w),
        Claim::CyclicConnectivity => check_cyclic(&g, value_usize(v)?, w),
        Claim::FourCover => check_four_cover(&g, v, w),
        Claim::JoinVerify => check_join(&g, v, w),
    }
}
