//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v
//! ...
//! ```
//!
//! Exactly `m` edge lines follow the header, each with `u < v < n`. The writer
//! emits edges in sorted order with LF line endings.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number; 0 when the problem is the document as a whole.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("expected two non-negative integers, found {0:?}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0} {1} is not written with u < v")]
    Unordered(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_ascii_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((a, b))
}

impl Graph {
    pub fn from_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut content = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = content.next().ok_or(ParseError {
            line: 0,
            kind: ParseErrorKind::MissingHeader,
        })?;
        let (order, declared) = parse_pair(header).ok_or_else(|| ParseError {
            line: header_line,
            kind: ParseErrorKind::Malformed(header.to_owned()),
        })?;

        let mut edges = Vec::with_capacity(declared);
        let mut seen = std::collections::HashSet::new();
        for (line, text) in content {
            let err = |kind| ParseError { line, kind };
            let (u, v) = parse_pair(text).ok_or_else(|| err(ParseErrorKind::Malformed(text.to_owned())))?;
            if u == v {
                return Err(err(ParseErrorKind::Loop(u)));
            }
            if u > v {
                return Err(err(ParseErrorKind::Unordered(u, v)));
            }
            if v >= order {
                return Err(err(ParseErrorKind::VertexOutOfRange { vertex: v, order }));
            }
            if !seen.insert((u, v)) {
                return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
            }
            edges.push((u, v));
            if edges.len() > declared {
                return Err(err(ParseErrorKind::EdgeCountMismatch { declared, found: edges.len() }));
            }
        }
        if edges.len() != declared {
            return Err(ParseError {
                line: header_line,
                kind: ParseErrorKind::EdgeCountMismatch { declared, found: edges.len() },
            });
        }
        edges.sort_unstable();
        Ok(Graph::from_sorted_unchecked(order, edges))
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.size() + 1));
        writeln!(out, "{} {}", self.order(), self.size()).unwrap();
        for &(u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::from_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = Graph::from_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn parses_complete_graph_with_comments() {
        let text = "# K4\n4 6\n0 1\n0 2\n0 3\n# middle\n1 2\n1 3\n2 3\n";
        let g = Graph::from_edge_list(text).unwrap();
        assert_eq!(g.degrees(), vec![3; 4]);
    }

    #[test]
    fn edge_order_is_irrelevant() {
        let a = Graph::from_edge_list("3 2\n1 2\n0 1\n").unwrap();
        assert_eq!(a, Graph::path(3));
    }

    #[test]
    fn reports_duplicate_with_line() {
        let err = Graph::from_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError { line: 3, kind: ParseErrorKind::DuplicateEdge(0, 1) });
    }

    #[test]
    fn reports_structural_errors() {
        let kind = |t: &str| Graph::from_edge_list(t).unwrap_err().kind;
        assert_eq!(kind("3 1\n1 1\n"), ParseErrorKind::Loop(1));
        assert_eq!(kind("3 1\n0 3\n"), ParseErrorKind::VertexOutOfRange { vertex: 3, order: 3 });
        assert_eq!(kind("3 1\n2 1\n"), ParseErrorKind::Unordered(2, 1));
        assert_eq!(kind("3 2\n0 1\n"), ParseErrorKind::EdgeCountMismatch { declared: 2, found: 1 });
        assert_eq!(kind("3 1\n0 1\n1 2\n"), ParseErrorKind::EdgeCountMismatch { declared: 1, found: 2 });
        assert_eq!(kind("# nothing\n"), ParseErrorKind::MissingHeader);
        assert!(matches!(kind("3 x\n"), ParseErrorKind::Malformed(_)));
    }

    #[test]
    fn writer_is_bit_exact() {
        assert_eq!(Graph::cycle(3).to_edge_list(), "3 3\n0 1\n0 2\n1 2\n");
    }
}
