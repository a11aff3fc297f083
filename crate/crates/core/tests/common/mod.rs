//! Brute-force reference implementations, deliberately independent of the
//! library's search code. Only suitable for graphs with at most 16 vertices.
#![allow(dead_code)]

use pmcover::Graph;

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Every edge set of size n/2 that touches each vertex exactly once.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<usize>> {
    let (n, m) = (g.order(), g.size());
    let mut out = Vec::new();
    combinations(m, n / 2, |set| {
        let mut seen = vec![false; n];
        for &e in set {
            let (u, v) = g.ends(e);
            if u == v || seen[u] || seen[v] {
                return;
            }
            seen[u] = true;
            seen[v] = true;
        }
        out.push(set.to_vec());
    });
    out
}

/// Minimum number of edges missed by three perfect matchings.
pub fn defect(g: &Graph) -> usize {
    let pms = perfect_matchings(g);
    let mut best = usize::MAX;
    for a in &pms {
        for b in &pms {
            for c in &pms {
                let mut hit = vec![false; g.size()];
                for &e in a.iter().chain(b).chain(c) {
                    hit[e] = true;
                }
                best = best.min(hit.iter().filter(|&&h| !h).count());
            }
        }
    }
    best
}

/// Fewest perfect matchings whose union is the whole edge set.
pub fn pmi(g: &Graph) -> usize {
    let pms = perfect_matchings(g);
    for k in 1..=pms.len() {
        let mut found = false;
        combinations(pms.len(), k, |set| {
            if found {
                return;
            }
            let mut hit = vec![false; g.size()];
            for &i in set {
                for &e in &pms[i] {
                    hit[e] = true;
                }
            }
            found = hit.iter().all(|&h| h);
        });
        if found {
            return k;
        }
    }
    usize::MAX
}

/// Proper 3-edge-colouring by plain backtracking in edge-id order.
pub fn colourable(g: &Graph) -> bool {
    fn go(g: &Graph, e: usize, col: &mut Vec<u8>) -> bool {
        if e == g.size() {
            return true;
        }
        let (u, v) = g.ends(e);
        if u == v {
            return false;
        }
        for c in 1..=3 {
            let clash = (0..e).any(|f| {
                let (a, b) = g.ends(f);
                col[f] == c && (a == u || a == v || b == u || b == v)
            });
            if !clash {
                col[e] = c;
                if go(g, e + 1, col) {
                    return true;
                }
            }
        }
        col[e] = 0;
        false
    }
    go(g, 0, &mut vec![0; g.size()])
}

fn has_cycle(g: &Graph, inside: &[bool]) -> bool {
    // a vertex set spans a cycle iff its induced graph is not a forest
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in 0..g.size() {
        let (u, v) = g.ends(e);
        if !inside[u] || !inside[v] {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return true;
        }
        parent[a] = b;
    }
    false
}

/// Smallest cycle-separating cut over all vertex subsets, or the cycle rank
/// when there is none.
pub fn cyclic_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let mut best = g.size() - n + 1;
    for bits in 1u32..(1 << (n - 1)) {
        let inside: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
        let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
        if has_cycle(g, &inside) && has_cycle(g, &outside) {
            let cut = (0..g.size())
                .filter(|&e| {
                    let (u, v) = g.ends(e);
                    inside[u] != inside[v]
                })
                .count();
            best = best.min(cut);
        }
    }
    best
}

/// Edges outside a maximum cut, over all vertex 2-labellings.
pub fn bipartite_index(g: &Graph) -> usize {
    let n = g.order();
    (0u32..(1 << (n - 1)))
        .map(|bits| {
            (0..g.size())
                .filter(|&e| {
                    let (u, v) = g.ends(e);
                    (bits >> u & 1) == (bits >> v & 1)
                })
                .count()
        })
        .min()
        .unwrap_or(0)
}

/// Fewest odd circuits in a 2-factor, reading each 2-factor as the
/// complement of a perfect matching.
pub fn oddness(g: &Graph) -> usize {
    let n = g.order();
    perfect_matchings(g)
        .iter()
        .map(|pm| {
            let rest: Vec<usize> = (0..g.size()).filter(|e| !pm.contains(e)).collect();
            let mut seen = vec![false; n];
            let mut odd = 0;
            for s in 0..n {
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
                        let w = if a == v { b } else if b == v { a } else { continue };
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                odd += len % 2;
            }
            odd
        })
        .min()
        .unwrap_or(usize::MAX)
}
