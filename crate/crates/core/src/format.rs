//! Plain-text edge lists.
//!
//! ```text
//! # spanner-graph v1 n=4 weighted=1 multigraph=0
//! 0 1 0.5
//! 1 2 2
//! ```
//!
//! The header must be the first line. Each remaining non-blank, non-`#` line
//! is one edge `u v [w]`; its id is its position among edge lines.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::Multigraph;

/// Largest vertex count accepted from a header.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Header {
    pub n: usize,
    pub weighted: bool,
    pub multigraph: bool,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn flag(value: &str, line: usize, key: &str) -> Result<bool, ParseError> {
    match value {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(err(line, format!("{key} must be 0 or 1, got {value:?}"))),
    }
}

pub fn parse_header(text: &str) -> Result<Header, ParseError> {
    let mut tokens = text.split_whitespace();
    let mut expect = |want: &str| match tokens.next() {
        Some(t) if t == want => Ok(()),
        other => Err(err(1, format!("malformed header: expected {want:?}, found {other:?}"))),
    };
    expect("#")?;
    expect("spanner-graph")?;
    expect("v1")?;
    let mut field = |key: &str| -> Result<String, ParseError> {
        let tok = tokens
            .next()
            .ok_or_else(|| err(1, format!("malformed header: missing {key}=")))?;
        tok.strip_prefix(key)
            .and_then(|t| t.strip_prefix('='))
            .map(str::to_string)
            .ok_or_else(|| err(1, format!("malformed header: expected {key}=, found {tok:?}")))
    };
    let n_raw = field("n")?;
    let weighted = flag(&field("weighted")?, 1, "weighted")?;
    let multigraph = flag(&field("multigraph")?, 1, "multigraph")?;
    if let Some(extra) = tokens.next() {
        return Err(err(1, format!("malformed header: unexpected {extra:?}")));
    }
    let n: usize = n_raw
        .parse()
        .map_err(|_| err(1, format!("malformed header: bad vertex count {n_raw:?}")))?;
    if n > MAX_VERTICES {
        return Err(err(1, format!("vertex count {n} exceeds {MAX_VERTICES}")));
    }
    Ok(Header { n, weighted, multigraph })
}

fn vertex(tok: &str, line: usize, n: usize) -> Result<usize, ParseError> {
    let v: usize = tok.parse().map_err(|_| err(line, format!("bad vertex id {tok:?}")))?;
    if v >= n {
        return Err(err(line, format!("vertex {v} out of range for n={n}")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = text.lines();
    let header = parse_header(lines.next().ok_or_else(|| err(1, "empty input, header required"))?)?;
    let n = header.n;
    let mut g = if header.weighted { Multigraph::new_weighted(n) } else { Multigraph::new(n) };
    let mut seen = HashSet::new();
    for (idx, raw) in lines.enumerate() {
        let line = idx + 2;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let (u, v, w) = match tokens.as_slice() {
            [u, v] => (u, v, None),
            [u, v, w] => (u, v, Some(w)),
            _ => return Err(err(line, format!("expected `u v [w]`, got {body:?}"))),
        };
        let (u, v) = (vertex(u, line, n)?, vertex(v, line, n)?);
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        let weight = match (w, header.weighted) {
            (Some(w), false) => return Err(err(line, format!("weight {w:?} given but weighted=0"))),
            (None, true) => return Err(err(line, "missing weight (weighted=1)")),
            (None, false) => 1.0,
            (Some(w), true) => {
                let x: f64 = w.parse().map_err(|_| err(line, format!("bad weight {w:?}")))?;
                if !(x.is_finite() && x > 0.0) {
                    return Err(err(line, format!("weight must be positive and finite, got {w}")));
                }
                x
            }
        };
        if !header.multigraph && !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("parallel edge {u}-{v} but multigraph=0")));
        }
        let added = if header.weighted {
            g.add_weighted_edge(u, v, weight)
        } else {
            g.add_edge(u, v)
        };
        added.map_err(|e| err(line, e.to_string()))?;
    }
    Ok(g)
}

pub fn read_graph(path: &Path) -> Result<Multigraph, FormatError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_graph(&text).map_err(|source| FormatError::Parse { path: shown, source })
}

/// Serialises `g`; weights use the shortest exact decimal form, so parsing
/// the output restores the same graph.
pub fn emit_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# spanner-graph v1 n={} weighted={} multigraph={}",
        g.n(),
        u8::from(g.is_weighted()),
        u8::from(g.has_parallel_edges())
    );
    for e in g.edges() {
        if g.is_weighted() {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, e.weight);
        } else {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        }
    }
    out
}

/// The subgraph of `g` formed by `edges`, as a standalone graph on the same
/// vertex set (edge ids renumbered in the given order).
pub fn subgraph(g: &Multigraph, edges: &[usize]) -> Multigraph {
    let mut h = if g.is_weighted() { Multigraph::new_weighted(g.n()) } else { Multigraph::new(g.n()) };
    for &e in edges {
        let edge = g.edge(e);
        if g.is_weighted() {
            h.add_weighted_edge(edge.u, edge.v, edge.weight).expect("host edge is valid");
        } else {
            h.add_edge(edge.u, edge.v).expect("host edge is valid");
        }
    }
    h
}

/// Maps each edge of `h` onto a distinct edge of `g` with the same endpoints
/// and weight, preferring the smallest unused id. Fails with the first `h`
/// edge that has no partner.
pub fn embed_subgraph(g: &Multigraph, h: &Multigraph) -> Result<Vec<usize>, usize> {
    if g.n() != h.n() {
        return Err(0);
    }
    let mut used = vec![false; g.edge_count()];
    let mut ids = Vec::with_capacity(h.edge_count());
    for (i, e) in h.edges().iter().enumerate() {
        let hit = g
            .edges_between(e.u, e.v)
            .find(|&c| !used[c] && g.weight(c) == e.weight)
            .ok_or(i)?;
        used[hit] = true;
        ids.push(hit);
    }
    ids.sort_unstable();
    Ok(ids)
}
