//! Cycle counting through the cycle space.
//!
//! Every simple cycle is a nonempty element of the cycle space, i.e. a
//! symmetric difference of fundamental cycles. For cycle rank `c` there are
//! `2^c - 1` such elements; an element is a simple cycle exactly when its edge
//! set is connected and 2-regular on the vertices it touches.

use std::collections::VecDeque;
use std::fmt;

use super::{Graph, GraphError};

/// Cycle ranks above this are refused rather than enumerated.
const MAX_CYCLE_RANK: usize = 24;

/// Number of cycles in a tricyclic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct CycleClass(u8);

impl CycleClass {
    pub const ALL: [CycleClass; 4] = [CycleClass(3), CycleClass(4), CycleClass(6), CycleClass(7)];

    pub fn new(count: usize) -> Option<Self> {
        matches!(count, 3 | 4 | 6 | 7).then_some(CycleClass(count as u8))
    }

    pub fn count(self) -> usize {
        self.0 as usize
    }
}

impl TryFrom<usize> for CycleClass {
    type Error = GraphError;

    fn try_from(count: usize) -> Result<Self, Self::Error> {
        CycleClass::new(count).ok_or(GraphError::ImpossibleCycleCount(count))
    }
}

impl From<CycleClass> for usize {
    fn from(class: CycleClass) -> usize {
        class.count()
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fundamental cycles of a BFS spanning tree, each as a bit vector over edge
/// indices of `g.edges()`.
fn fundamental_cycles(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let edge_index = |u: usize, v: usize| {
        g.edges()
            .binary_search(&(u.min(v), u.max(v)))
            .expect("neighbor pairs are edges")
    };

    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut in_tree = vec![false; g.size()];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                depth[w] = depth[u] + 1;
                in_tree[edge_index(u, w)] = true;
                queue.push_back(w);
            }
        }
    }

    g.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| !in_tree[i])
        .map(|(i, &(u, v))| {
            let mut set = vec![false; g.size()];
            set[i] = true;
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let p = parent[a].expect("non-root vertex has a parent");
                set[edge_index(a, p)] = true;
                a = p;
            }
            set
        })
        .collect()
}

fn is_simple_cycle(g: &Graph, set: &[bool]) -> bool {
    let n = g.order();
    let mut deg = vec![0usize; n];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut start = None;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if set[i] {
            deg[u] += 1;
            deg[v] += 1;
            adj[u].push(v);
            adj[v].push(u);
            start = Some(u);
        }
    }
    let Some(start) = start else { return false };
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let touched = deg.iter().filter(|&&d| d == 2).count();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == touched
}

/// Number of distinct simple cycles of a connected graph.
pub fn count_cycles(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let basis = fundamental_cycles(g);
    let rank = basis.len();
    if rank > MAX_CYCLE_RANK {
        return Err(GraphError::CycleSpaceTooLarge(rank));
    }
    let mut count = 0;
    let mut combo = vec![false; g.size()];
    for mask in 1u32..(1u32 << rank) {
        combo.iter_mut().for_each(|b| *b = false);
        for (j, cycle) in basis.iter().enumerate() {
            if mask & (1 << j) != 0 {
                for (c, &b) in combo.iter_mut().zip(cycle) {
                    *c ^= b;
                }
            }
        }
        if is_simple_cycle(g, &combo) {
            count += 1;
        }
    }
    Ok(count)
}

pub fn cycle_class(g: &Graph) -> Result<CycleClass, GraphError> {
    if !g.is_tricyclic() {
        return Err(GraphError::NotTricyclic { order: g.order(), size: g.size() });
    }
    CycleClass::try_from(count_cycles(g)?)
}
