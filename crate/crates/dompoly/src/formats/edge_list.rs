//! Plain edge lists: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use dompoly_core::{Graph, GraphError};
use thiserror::Error;

/// Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: malformed, expected {expected}")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: {n} vertices is above the limit of {max}")]
    TooManyVertices { line: usize, n: usize, max: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
}

fn two_numbers(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = two_numbers(header).ok_or(EdgeListError::Malformed {
        line: header_line,
        expected: "`n m`",
    })?;
    let mut g = Graph::empty(n).map_err(|e| match e {
        GraphError::TooManyVertices { n, max } => EdgeListError::TooManyVertices {
            line: header_line,
            n,
            max,
        },
        _ => unreachable!("empty graphs only fail on size"),
    })?;

    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = two_numbers(text).ok_or(EdgeListError::Malformed {
            line,
            expected: "`u v`",
        })?;
        g.add_edge(u, v).map_err(|e| match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                EdgeListError::VertexOutOfRange { line, vertex, n }
            }
            GraphError::SelfLoop(vertex) => EdgeListError::SelfLoop { line, vertex },
            GraphError::DuplicateEdge(u, v) => EdgeListError::DuplicateEdge { line, u, v },
            GraphError::TooManyVertices { .. } => unreachable!("order fixed by header"),
        })?;
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
