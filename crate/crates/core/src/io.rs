//! graph6 / sparse6 and the `cmg` multigraph text format.
//!
//! `cmg` is a header line `cmg <n> <m>` followed by `m` lines `u v`
//! (0-indexed). Repeated pairs are parallel edges, `u u` is a loop, and edge
//! ids follow file order.

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, Graph, Vertex};

fn g6_err(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn strip_header<'a>(line: &'a str, header: &str) -> &'a str {
    line.strip_prefix(header).unwrap_or(line)
}

/// Decodes the N(n) prefix; returns (n, remaining bytes).
fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let sextet = |b: u8| -> Result<usize> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(g6_err(format!("byte {b} outside printable range 63..=126")))
        }
    };
    match bytes {
        [] => Err(g6_err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated order"));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)?;
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated order"));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)?;
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sextet(*b)?, rest)),
    }
}

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

fn unpack_bits(bytes: &[u8]) -> Result<Vec<bool>> {
    let mut bits = Vec::with_capacity(bytes.len() * 6);
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(g6_err(format!("byte {b} outside printable range 63..=126")));
        }
        let x = b - 63;
        for i in (0..6).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    }
    Ok(bits)
}

fn pack_bits(bits: &[bool], out: &mut String) {
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for i in 0..6 {
            x = (x << 1) | u8::from(chunk.get(i).copied().unwrap_or(false));
        }
        out.push((x + 63) as char);
    }
}

/// Parses a graph6 line into an undirected simple graph. Edge ids follow the
/// lexicographic order of pairs `(u, v)`, `u < v`.
pub fn parse_graph6_any(text: &str) -> Result<Graph> {
    let line = strip_header(text.trim(), ">>graph6<<");
    let (n, rest) = decode_order(line.as_bytes())?;
    let bits = unpack_bits(rest)?;
    let needed = n * n.saturating_sub(1) / 2;
    if bits.len() < needed || bits.len() >= needed + 6 {
        return Err(g6_err(format!("expected {needed} adjacency bits, found {}", bits.len())));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    pairs.sort_unstable();
    Graph::from_edges(n, &pairs)
}

pub fn parse_graph6(text: &str) -> Result<CubicGraph> {
    CubicGraph::new(parse_graph6_any(text)?)
}

/// graph6 encoding; only simple graphs are representable.
pub fn write_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.order();
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edge_list() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i * n + j]);
        }
    }
    let mut out = String::new();
    encode_order(n, &mut out);
    pack_bits(&bits, &mut out);
    Ok(out)
}

fn bits_for(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n {
        k += 1;
    }
    k.max(1)
}

/// Parses a sparse6 line (leading `:`); multigraphs and loops allowed.
/// Edge ids follow the order in which edges are encoded.
pub fn parse_sparse6_any(text: &str) -> Result<Graph> {
    let line = strip_header(text.trim(), ">>sparse6<<");
    let body = line.strip_prefix(':').ok_or_else(|| g6_err("sparse6 must start with ':'"))?;
    let (n, rest) = decode_order(body.as_bytes())?;
    let bits = unpack_bits(rest)?;
    let k = bits_for(n);
    let mut g = Graph::new(n);
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let mut x = 0usize;
        for i in 0..k {
            x = (x << 1) | usize::from(bits[pos + 1 + i]);
        }
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            g.add_edge(x, v)?;
        }
    }
    Ok(g)
}

/// sparse6 encoding of an arbitrary multigraph. Edges are emitted sorted by
/// (larger end, smaller end), so ids are preserved only for graphs whose
/// edge list is already in that order.
pub fn write_sparse6(g: &Graph) -> String {
    let n = g.order();
    let k = bits_for(n);
    let mut edges: Vec<(Vertex, Vertex)> =
        g.edge_list().iter().map(|&(a, b)| (a.max(b), a.min(b))).collect();
    edges.sort_unstable();
    let mut bits = Vec::new();
    let push = |bits: &mut Vec<bool>, b: bool, x: usize| {
        bits.push(b);
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    let mut v = 0usize;
    for (y, x) in edges {
        if y == v {
            push(&mut bits, false, x);
        } else if y == v + 1 {
            push(&mut bits, true, x);
            v = y;
        } else {
            push(&mut bits, true, y);
            push(&mut bits, false, x);
            v = y;
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && v + 2 == n && pad > k {
        bits.push(false);
    }
    while bits.len() % 6 != 0 {
        bits.push(true);
    }
    let mut out = String::from(":");
    encode_order(n, &mut out);
    pack_bits(&bits, &mut out);
    out
}

pub fn parse_sparse6(text: &str) -> Result<CubicGraph> {
    CubicGraph::new(parse_sparse6_any(text)?)
}

fn cmg_err(msg: impl Into<String>) -> Error {
    Error::MalformedCmg(msg.into())
}

pub fn parse_cmg_any(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| cmg_err("empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "cmg" {
        return Err(cmg_err(format!("bad header {header:?}")));
    }
    let n: usize = fields[1].parse().map_err(|_| cmg_err("bad vertex count"))?;
    let m: usize = fields[2].parse().map_err(|_| cmg_err("bad edge count"))?;
    let mut g = Graph::new(n);
    for i in 0..m {
        let line = lines.next().ok_or_else(|| cmg_err(format!("expected {m} edges, found {i}")))?;
        let ends: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| cmg_err(format!("bad edge line {line:?}"))))
            .collect::<Result<_>>()?;
        if ends.len() != 2 {
            return Err(cmg_err(format!("bad edge line {line:?}")));
        }
        g.add_edge(ends[0], ends[1]).map_err(|_| cmg_err(format!("vertex out of range in {line:?}")))?;
    }
    if let Some(extra) = lines.next() {
        return Err(cmg_err(format!("trailing content {extra:?}")));
    }
    Ok(g)
}

pub fn parse_cmg(text: &str) -> Result<CubicGraph> {
    CubicGraph::new(parse_cmg_any(text)?)
}

pub fn write_cmg(g: &Graph) -> String {
    let mut out = format!("cmg {} {}\n", g.order(), g.size());
    for &(u, v) in g.edge_list() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Splits a text stream into graphs: `cmg` blocks (terminated by a blank
/// line or the next header) and graph6/sparse6 lines, in input order.
pub fn parse_stream(text: &str) -> Vec<Result<CubicGraph>> {
    let mut out = Vec::new();
    let mut block: Option<String> = None;
    for line in text.lines() {
        let t = line.trim();
        if t.starts_with("cmg") {
            if let Some(b) = block.take() {
                out.push(parse_cmg(&b));
            }
            block = Some(format!("{t}\n"));
            continue;
        }
        if let Some(b) = block.as_mut() {
            if t.is_empty() {
                out.push(parse_cmg(b));
                block = None;
            } else {
                b.push_str(t);
                b.push('\n');
            }
            continue;
        }
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        out.push(parse_graph_line(t));
    }
    if let Some(b) = block {
        out.push(parse_cmg(&b));
    }
    out
}

/// A single graph6 or sparse6 line.
pub fn parse_graph_line(line: &str) -> Result<CubicGraph> {
    let t = line.trim();
    if t.starts_with(':') || t.starts_with(">>sparse6<<") {
        parse_sparse6(t)
    } else {
        parse_graph6(t)
    }
}

/// graph6 for simple graphs, otherwise a `cmg` block.
pub fn write_any(g: &Graph) -> String {
    match write_graph6(g) {
        Ok(s) => s + "\n",
        Err(_) => write_cmg(g),
    }
}
