//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`.
//! Whitespace is free-form; blank lines are ignored.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".to_string()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(Error::MalformedHeader(header.to_string()));
    };
    let n: usize = n
        .parse()
        .map_err(|_| Error::MalformedHeader(header.to_string()))?;
    let m: usize = m
        .parse()
        .map_err(|_| Error::MalformedHeader(header.to_string()))?;

    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let malformed = || Error::MalformedEdge {
            line: idx + 1,
            text: line.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(malformed());
        };
        let u: usize = u.parse().map_err(|_| malformed())?;
        let v: usize = v.parse().map_err(|_| malformed())?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges)
}

/// Canonical form: header, then edges `u v` with `u < v` in lexicographic
/// order, every line newline-terminated.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    let _ = writeln!(out, "{} {}", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
