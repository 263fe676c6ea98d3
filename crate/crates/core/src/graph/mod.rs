//! Labeled simple undirected graphs.
//!
//! Vertices are the dense labels `0..n`. Every surgery in [`surgery`] returns a
//! fresh graph and appends any new vertex at the end of the label range, so
//! outputs are deterministic functions of their inputs.

mod cycles;
mod edgelist;
mod iso;
mod paths;
mod surgery;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use cycles::{count_cycles, cycle_class, CycleClass};
pub use edgelist::{ParseError, ParseErrorKind};
pub use iso::{are_isomorphic, canonical_form, from_canonical, CANONICAL_MAX_ORDER};
pub use paths::{classify_edge, internal_paths, pendant_paths, EdgeClass, InternalPath, PendantPath};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not tricyclic (n = {order}, m = {size})")]
    NotTricyclic { order: usize, size: usize },
    #[error("tricyclic graph with {0} cycles; only 3, 4, 6 or 7 are possible")]
    ImpossibleCycleCount(usize),
    #[error("cycle space of dimension {0} is too large to enumerate")]
    CycleSpaceTooLarge(usize),
    #[error("order {order} exceeds the supported maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; loops, duplicates and out-of-range labels are rejected.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= order {
                    return Err(GraphError::VertexOutOfRange { vertex, order });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(order, normalized))
    }

    /// `edges` must be sorted, deduplicated, loop-free and in range.
    pub(crate) fn from_sorted_unchecked(order: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { order, edges, adj }
    }

    pub fn path(order: usize) -> Self {
        Self::from_sorted_unchecked(order, (1..order).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        edges.push((0, order - 1));
        edges.sort_unstable();
        Self::from_sorted_unchecked(order, edges)
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unchecked(order, edges)
    }

    /// `K_{1,leaves}` with the center at label 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_unchecked(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self) -> bool {
        self.adj.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    /// Number of degree-one vertices.
    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|n| n.len() == 1).count()
    }

    pub fn is_tricyclic(&self) -> bool {
        self.size() == self.order + 2 && self.is_connected()
    }

    /// Relabels by `perm`: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order, "permutation length must equal the order");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted_unchecked(self.order, edges)
    }

    /// Graph with edges removed; the vertex set is unchanged.
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Self {
        let removed: Vec<_> = removed.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Self::from_sorted_unchecked(self.order, edges)
    }

    /// Induced subgraph on all vertices except `v`, relabeled densely.
    pub fn without_vertex(&self, v: usize) -> Self {
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Self::from_sorted_unchecked(self.order - 1, edges)
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex, order: self.order })
        }
    }

    pub(crate) fn check_edge(&self, u: usize, v: usize) -> Result<(), GraphError> {
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(GraphError::NotAnEdge(u, v))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(Graph::path(3).degrees(), vec![1, 2, 1]);
        assert_eq!(Graph::complete(4).degrees(), vec![3; 4]);
        assert_eq!(Graph::cycle(5).degrees(), vec![2; 5]);
        assert_eq!(Graph::star(4).degrees(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::complete(4).is_connected());
    }

    #[test]
    fn pendant_counts() {
        assert_eq!(Graph::path(4).pendant_count(), 2);
        assert_eq!(Graph::cycle(5).pendant_count(), 0);
        assert_eq!(Graph::star(4).pendant_count(), 4);
    }

    #[test]
    fn tricyclic_membership() {
        assert!(Graph::complete(4).is_tricyclic());
        assert!(!Graph::cycle(5).is_tricyclic());
        let k4_plus = Graph::new(5, Graph::complete(4).edges().iter().copied().chain([(0, 4)])).unwrap();
        assert!(k4_plus.is_tricyclic());
        assert!(!Graph::new(6, Graph::complete(4).edges().iter().copied().chain([(4, 5)])).unwrap().is_tricyclic());
    }

    #[test]
    fn vertex_deletion_relabels() {
        let g = Graph::path(4).without_vertex(0);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let g = Graph::cycle(4).without_vertex(1);
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }
}
