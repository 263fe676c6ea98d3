//! Edge surgeries: subdivision, neighbor relocation and pendant-path attachment.

use std::collections::BTreeSet;

use super::{Graph, GraphError};

impl Graph {
    /// Replaces `uv` by `u w` and `w v`, with `w` the new vertex `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_edge(u, v)?;
        let w = self.order();
        let edges = self
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .chain([(u, w), (v, w)]);
        Graph::new(w + 1, edges)
    }

    /// Moves the edges `v x` for `x` in `moved` over to `u`.
    ///
    /// Every `x` must be a neighbor of `v` that is neither `u` nor adjacent to
    /// `u`, so the result stays simple.
    pub fn relocate_neighbors(&self, u: usize, v: usize, moved: &BTreeSet<usize>) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Precondition("u and v must differ".into()));
        }
        if moved.is_empty() {
            return Err(GraphError::Precondition("relocated set is empty".into()));
        }
        for &x in moved {
            if x == u {
                return Err(GraphError::Precondition(format!("{x} is u itself")));
            }
            if !self.has_edge(v, x) {
                return Err(GraphError::Precondition(format!("{x} is not a neighbor of {v}")));
            }
            if self.has_edge(u, x) {
                return Err(GraphError::Precondition(format!("{x} is already adjacent to {u}")));
            }
        }
        let removed: Vec<_> = moved.iter().map(|&x| (v.min(x), v.max(x))).collect();
        let edges = self
            .edges()
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .chain(moved.iter().map(|&x| (u, x)));
        Graph::new(self.order(), edges)
    }

    /// Hangs a fresh path of each given length off `v`. New vertices are
    /// numbered consecutively, path by path, each path starting next to `v`.
    pub fn attach_pendant_paths(&self, v: usize, lengths: &[usize]) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        if lengths.is_empty() {
            return Err(GraphError::Precondition("no pendant paths to attach".into()));
        }
        if lengths.contains(&0) {
            return Err(GraphError::Precondition("pendant paths need length at least 1".into()));
        }
        let mut edges = self.edges().to_vec();
        let mut next = self.order();
        for &len in lengths {
            let mut prev = v;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivisions() {
        let c4 = Graph::cycle(3).subdivide_edge(0, 1).unwrap();
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert!(c4.is_connected());
        let p4 = Graph::path(3).subdivide_edge(1, 2).unwrap();
        assert_eq!((p4.order(), p4.size()), (4, 3));
        assert_eq!(p4.pendant_count(), 2);
        assert_eq!(Graph::path(3).subdivide_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn relocation_of_path_end_makes_star() {
        // a-b-c-d as 0-1-2-3; move d from c to b
        let g = Graph::path(4).relocate_neighbors(1, 2, &BTreeSet::from([3])).unwrap();
        assert_eq!(g, Graph::new(4, [(1, 0), (1, 2), (1, 3)]).unwrap());
        assert_eq!((g.order(), g.size()), (4, 3));
    }

    #[test]
    fn relocation_preconditions() {
        let tri = Graph::cycle(3);
        // 2 is adjacent to both 0 and 1
        assert!(tri.relocate_neighbors(0, 1, &BTreeSet::from([2])).is_err());
        assert!(Graph::path(4).relocate_neighbors(1, 2, &BTreeSet::from([1])).is_err());
        assert!(Graph::path(4).relocate_neighbors(1, 2, &BTreeSet::from([0])).is_err());
        assert!(Graph::path(4).relocate_neighbors(1, 2, &BTreeSet::new()).is_err());
    }

    #[test]
    fn attachments() {
        let paw = Graph::cycle(3).attach_pendant_paths(0, &[1]).unwrap();
        assert_eq!((paw.order(), paw.size()), (4, 4));
        assert_eq!(paw.pendant_count(), 1);
        assert!(Graph::cycle(3).attach_pendant_paths(0, &[]).is_err());
        assert!(Graph::cycle(3).attach_pendant_paths(0, &[2, 0]).is_err());
        assert!(Graph::cycle(3).attach_pendant_paths(5, &[1]).is_err());
        let g = Graph::cycle(3).attach_pendant_paths(1, &[2, 1]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 5), (3, 4)]);
    }
}
