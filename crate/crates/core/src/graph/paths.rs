//! Pendant and internal paths.
//!
//! Both are traced as maximal chains through degree-2 vertices. A chain that
//! ends in a degree-1 vertex is a pendant path (as long as some vertex on it
//! has degree at least two); a chain whose ends both have degree at least three
//! is an internal path, which may close up on a single vertex.

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum EdgeClass {
    PendantPathEdge,
    InternalPathEdge,
    Other,
}

/// A pendant path hanging from `anchor`; `vertices` runs from the anchor's
/// neighbor out to the leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantPath {
    pub anchor: usize,
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("pendant paths have at least one vertex")
    }
}

/// An internal path `start, interior..., end`; `start == end` for the closed
/// variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InternalPath {
    pub start: usize,
    pub interior: Vec<usize>,
    pub end: usize,
}

impl InternalPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.interior.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end
    }
}

/// Walks from `cur` (entered from `prev`) while the current vertex has degree
/// two and has not returned to `stop`. Returns the final vertex and the
/// degree-2 vertices passed through.
fn walk(g: &Graph, mut prev: usize, mut cur: usize, stop: usize) -> (usize, Vec<usize>) {
    let mut interior = Vec::new();
    while g.degree(cur) == 2 && cur != stop {
        interior.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
        prev = cur;
        cur = next;
    }
    (cur, interior)
}

pub fn classify_edge(g: &Graph, u: usize, v: usize) -> Result<EdgeClass, GraphError> {
    g.check_edge(u, v)?;
    let (end_b, fwd) = walk(g, u, v, u);
    if end_b == u && g.degree(u) == 2 {
        // the component is a bare cycle
        return Ok(EdgeClass::Other);
    }
    let (end_a, back) = walk(g, v, u, v);
    let (da, db) = (g.degree(end_a), g.degree(end_b));
    let edges_on_chain = fwd.len() + back.len() + 1;
    let class = if da >= 3 && db >= 3 {
        EdgeClass::InternalPathEdge
    } else if da == 1 && db == 1 {
        if edges_on_chain >= 2 {
            EdgeClass::PendantPathEdge
        } else {
            EdgeClass::Other
        }
    } else if da == 1 || db == 1 {
        EdgeClass::PendantPathEdge
    } else {
        EdgeClass::Other
    };
    Ok(class)
}

/// All maximal pendant paths whose anchor has degree at least three.
pub fn pendant_paths(g: &Graph) -> Vec<PendantPath> {
    (0..g.order())
        .filter(|&leaf| g.degree(leaf) == 1)
        .filter_map(|leaf| {
            let first = g.neighbors(leaf)[0];
            let (anchor, mut inner) = walk(g, leaf, first, leaf);
            if g.degree(anchor) < 3 {
                return None;
            }
            inner.reverse();
            inner.push(leaf);
            Some(PendantPath { anchor, vertices: inner })
        })
        .collect()
}

/// All internal paths, each reported once.
pub fn internal_paths(g: &Graph) -> Vec<InternalPath> {
    let mut out: Vec<InternalPath> = Vec::new();
    for start in (0..g.order()).filter(|&v| g.degree(v) >= 3) {
        for &first in g.neighbors(start) {
            let (end, interior) = walk(g, start, first, start);
            if g.degree(end) < 3 {
                continue;
            }
            let seen = out.iter().any(|p| {
                let same_ends = (p.start, p.end) == (end, start) || (p.start, p.end) == (start, end);
                let mut reversed = p.interior.clone();
                reversed.reverse();
                same_ends && (p.interior == interior || reversed == interior)
            });
            if !seen {
                out.push(InternalPath { start, interior, end });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn cycle_edges_are_other() {
        let g = Graph::cycle(5);
        for &(u, v) in g.edges() {
            assert_eq!(classify_edge(&g, u, v).unwrap(), EdgeClass::Other);
        }
    }

    #[test]
    fn path_graph_edges_are_pendant() {
        let g = Graph::path(4);
        for &(u, v) in g.edges() {
            assert_eq!(classify_edge(&g, u, v).unwrap(), EdgeClass::PendantPathEdge);
        }
        assert_eq!(classify_edge(&Graph::path(2), 0, 1).unwrap(), EdgeClass::Other);
    }

    #[test]
    fn paw_edges() {
        let g = paw();
        assert_eq!(classify_edge(&g, 0, 3).unwrap(), EdgeClass::PendantPathEdge);
        // the triangle closes on the degree-3 vertex
        assert_eq!(classify_edge(&g, 1, 2).unwrap(), EdgeClass::InternalPathEdge);
        assert_eq!(classify_edge(&g, 0, 1).unwrap(), EdgeClass::InternalPathEdge);
        assert_eq!(classify_edge(&g, 1, 3), Err(GraphError::NotAnEdge(1, 3)));
    }

    #[test]
    fn traces_paths() {
        let g = paw();
        let pendant = pendant_paths(&g);
        assert_eq!(pendant, vec![PendantPath { anchor: 0, vertices: vec![3] }]);
        let internal = internal_paths(&g);
        assert_eq!(internal.len(), 1);
        assert!(internal[0].is_closed());
        assert_eq!(internal[0].len(), 3);
    }

    #[test]
    fn theta_internal_paths() {
        // two hubs joined by paths of length 1, 2 and 3
        let g = Graph::new(5, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let mut lens: Vec<_> = internal_paths(&g).iter().map(InternalPath::len).collect();
        lens.sort_unstable();
        assert_eq!(lens, vec![1, 2, 3]);
    }
}
