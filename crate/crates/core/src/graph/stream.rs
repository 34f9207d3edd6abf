//! Line-oriented stream files: one `u v` pair per line, `#` starts a comment,
//! arrival order is line order.

use std::collections::HashSet;
use std::fmt::Write;

use super::{Edge, EdgeStream, GraphError, VertexId};

pub fn parse_stream(text: &str) -> Result<EdgeStream, GraphError> {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let vertex = |tokens: &mut std::str::SplitWhitespace<'_>| -> Result<VertexId, GraphError> {
            let tok = tokens.next().ok_or_else(|| GraphError::Parse {
                line,
                message: format!("expected two vertex labels, got {body:?}"),
            })?;
            tok.parse::<u64>().map(VertexId).map_err(|_| GraphError::Parse {
                line,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let u = vertex(&mut tokens)?;
        let v = vertex(&mut tokens)?;
        if let Some(extra) = tokens.next() {
            return Err(GraphError::Parse { line, message: format!("unexpected token {extra:?}") });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v, line });
        }
        let key = if u <= v { (u, v) } else { (v, u) };
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge { u, v, line });
        }
        let arrival = edges.len();
        edges.push(Edge { u, v, arrival });
    }
    Ok(EdgeStream::from_edges_unchecked(edges))
}

/// Inverse of [`parse_stream`]: one `u v` line per edge, no comments.
pub fn serialize_stream(stream: &EdgeStream) -> String {
    let mut out = String::with_capacity(stream.len() * 8);
    for e in stream {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}
