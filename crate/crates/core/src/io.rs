//! graph6 (short form, n <= 62) and plain edge-list codecs.
//!
//! graph6: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed
//! big-endian into 6-bit groups (zero padded), each emitted as `value + 63`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_N: usize = 62;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::SizeGuard {
            what: "graph6 short form",
            size: n,
            limit: GRAPH6_MAX_N,
        });
    }
    let mut out = String::with_capacity(1 + payload_len(n));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are stripped; padding bits must be zero.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let Some((&head, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} is outside the printable range 63..=126")));
    }
    if head == 126 {
        return Err(Error::Graph6("long-form header (n > 62) is not supported".into()));
    }
    let n = (head - 63) as usize;
    let expected = payload_len(n);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "payload has {} bytes, expected {} for n = {}",
            body.len(),
            expected,
            n
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let total_bits = expected * 6;
    if (k..total_bits).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    Graph::from_edge_list(n, edges)
}

/// Edge-list text: a line `n m`, then `m` lines `u v`, 0-based.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing 'n m' header".into()))?;
    let (n, m) = parse_pair(header)?;
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::EdgeList(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    let g = Graph::from_edge_list(n, edges).map_err(|e| Error::EdgeList(e.to_string()))?;
    if g.m() != m {
        return Err(Error::EdgeList(format!("{} duplicate edge lines", m - g.m())));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let bad = || Error::EdgeList(format!("expected two non-negative integers, got {line:?}"));
    let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// Reads every graph in a text blob. An edge list (first line `n m`) holds a
/// single graph; otherwise each non-empty line is graph6.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(line) if line.bytes().all(|b| b.is_ascii_digit() || b == b' ' || b == b'\t') => {
            Ok(vec![parse_edge_list(text)?])
        }
        Some(_) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}
