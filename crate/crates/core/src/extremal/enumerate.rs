//! Labeled enumeration of connected graphs with `n + 2` edges.
//!
//! The search walks edge subsets depth-first in lexicographic order of the
//! sorted pair list `(0,1), (0,2), ..., (n-2,n-1)`. Once the next candidate
//! pair starts at vertex `a`, every vertex below `a` has its final degree,
//! which prunes isolated vertices and surplus pendant vertices early.

use std::env;

use serde::{Deserialize, Serialize};

use super::SearchError;
use crate::graph::{CycleClass, Graph};

/// Default cap on the order in exhaustive mode.
pub const EXHAUSTIVE_MAX_ORDER: usize = 9;
/// Environment variable that raises (or lowers) [`EXHAUSTIVE_MAX_ORDER`].
pub const MAX_ORDER_ENV: &str = "ALPHA_EXTREMAL_MAX_N";
/// Edge sets are packed into a `u128`, which fits `C(16, 2) = 120` pairs.
pub const HARD_MAX_ORDER: usize = 16;

pub fn max_exhaustive_order() -> usize {
    env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(EXHAUSTIVE_MAX_ORDER)
        .min(HARD_MAX_ORDER)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerationQuery {
    pub order: usize,
    /// Required number of pendant vertices; `None` accepts any number.
    pub pendants: Option<usize>,
    pub class: Option<CycleClass>,
    pub alphas: Vec<f64>,
}

impl EnumerationQuery {
    pub fn new(order: usize, pendants: usize) -> Self {
        EnumerationQuery { order, pendants: Some(pendants), class: None, alphas: Vec::new() }
    }

    /// Every connected graph with `order + 2` edges, whatever its pendant count.
    pub fn any_pendants(order: usize) -> Self {
        EnumerationQuery { order, pendants: None, class: None, alphas: Vec::new() }
    }

    pub fn with_class(mut self, class: CycleClass) -> Self {
        self.class = Some(class);
        self
    }

    pub fn with_alphas(mut self, alphas: &[f64]) -> Self {
        self.alphas = alphas.to_vec();
        self
    }

    pub fn size(&self) -> usize {
        self.order + 2
    }

    pub(crate) fn validate(&self) -> Result<(), SearchError> {
        let max = max_exhaustive_order();
        if self.order > max {
            return Err(SearchError::OrderTooLarge { order: self.order, max });
        }
        if self.order < 4 {
            return Err(SearchError::OrderTooSmall(self.order));
        }
        Ok(())
    }
}

/// Pair index `i` holds `pairs[i] = (u, v)`, `u < v`, in lexicographic order.
pub(crate) fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// A compact labeled graph: bit `i` of `mask` selects `pairs[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct EdgeMask(pub u128);

impl EdgeMask {
    pub fn to_graph(self, n: usize, pairs: &[(usize, usize)]) -> Graph {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| self.0 >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_sorted_unchecked(n, edges)
    }

    pub fn neighbor_bits(self, n: usize, pairs: &[(usize, usize)]) -> [u16; HARD_MAX_ORDER] {
        let mut adj = [0u16; HARD_MAX_ORDER];
        let mut bits = self.0;
        while bits != 0 {
            let (u, v) = pairs[bits.trailing_zeros() as usize];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            bits &= bits - 1;
        }
        debug_assert!(adj[n..].iter().all(|&b| b == 0));
        adj
    }
}

/// Connectivity of a graph given as neighbor bitmasks.
fn connected(adj: &[u16]) -> bool {
    let n = adj.len();
    let full: u32 = (1 << n) - 1;
    let mut seen: u32 = 1;
    let mut frontier: u32 = 1;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= u32::from(adj[v]);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Cycle count of a connected graph given by neighbor bitmasks and its edge
/// mask, via combinations of fundamental cycles.
pub(crate) fn cycle_count_masked(adj: &[u16], mask: u128, pairs: &[(usize, usize)], index: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut parent = [usize::MAX; HARD_MAX_ORDER];
    let mut depth = [0usize; HARD_MAX_ORDER];
    let mut tree: u128 = 0;
    let mut queue = [0usize; HARD_MAX_ORDER];
    let (mut head, mut tail) = (0, 1);
    let mut seen: u32 = 1;
    while head < tail {
        let u = queue[head];
        head += 1;
        let mut nb = u32::from(adj[u]) & !seen;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= 1 << w;
            parent[w] = u;
            depth[w] = depth[u] + 1;
            tree |= 1u128 << index[u][w];
            queue[tail] = w;
            tail += 1;
        }
    }

    let mut basis = [0u128; 8];
    let mut rank = 0;
    let mut rest = mask & !tree;
    while rest != 0 {
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (mut a, mut b) = pairs[e];
        let mut cycle = 1u128 << e;
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            cycle |= 1u128 << index[a][parent[a]];
            a = parent[a];
        }
        if rank == basis.len() {
            // beyond the cycle ranks the enumerator produces
            return usize::MAX;
        }
        basis[rank] = cycle;
        rank += 1;
    }

    let mut count = 0;
    for combo in 1u32..(1 << rank) {
        let mut set = 0u128;
        for (j, c) in basis[..rank].iter().enumerate() {
            if combo >> j & 1 == 1 {
                set ^= c;
            }
        }
        if is_cycle_set(n, set, pairs) {
            count += 1;
        }
    }
    count
}

fn is_cycle_set(n: usize, set: u128, pairs: &[(usize, usize)]) -> bool {
    let mut deg = [0u8; HARD_MAX_ORDER];
    let mut adj = [0u16; HARD_MAX_ORDER];
    let mut bits = set;
    let mut start = 0;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = pairs[e];
        deg[u] += 1;
        deg[v] += 1;
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        start = u;
    }
    let mut touched: u32 = 0;
    for v in 0..n {
        match deg[v] {
            0 => {}
            2 => touched |= 1 << v,
            _ => return false,
        }
    }
    let mut seen: u32 = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= u32::from(adj[v]);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == touched
}

/// Depth-first enumerator over edge subsets. Optionally restricted to the
/// subsets whose two smallest pair indices are fixed.
pub(crate) struct Enumerator {
    n: usize,
    m: usize,
    pendants: Option<usize>,
    class: Option<CycleClass>,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
    stack: Vec<usize>,
    pos: usize,
    floor: usize,
    deg: [u8; HARD_MAX_ORDER],
    adj: [u16; HARD_MAX_ORDER],
    mask: u128,
    done: bool,
}

impl Enumerator {
    pub fn new(q: &EnumerationQuery, prefix: &[usize]) -> Self {
        let n = q.order;
        let pairs = pair_list(n);
        let mut index = vec![vec![usize::MAX; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            index[u][v] = i;
            index[v][u] = i;
        }
        let mut e = Enumerator {
            n,
            m: q.size(),
            pendants: q.pendants,
            class: q.class,
            pairs,
            index,
            stack: Vec::with_capacity(q.size()),
            pos: 0,
            floor: prefix.len(),
            deg: [0; HARD_MAX_ORDER],
            adj: [0; HARD_MAX_ORDER],
            mask: 0,
            done: false,
        };
        debug_assert!(prefix.windows(2).all(|w| w[0] < w[1]));
        for &i in prefix {
            e.push(i);
        }
        e.pos = prefix.last().map_or(0, |&i| i + 1);
        e
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn push(&mut self, i: usize) {
        let (u, v) = self.pairs[i];
        self.stack.push(i);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.mask |= 1u128 << i;
    }

    fn pop(&mut self) -> usize {
        let i = self.stack.pop().expect("stack nonempty");
        let (u, v) = self.pairs[i];
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.mask &= !(1u128 << i);
        i
    }

    fn backtrack(&mut self) {
        if self.stack.len() <= self.floor {
            self.done = true;
        } else {
            self.pos = self.pop() + 1;
        }
    }

    /// Vertices `0..upto` have final degrees; are they still admissible?
    fn finalized_ok(&self, upto: usize) -> bool {
        let mut pendant = 0;
        for v in 0..upto {
            match self.deg[v] {
                0 => return false,
                1 => pendant += 1,
                _ => {}
            }
        }
        self.pendants.map_or(true, |k| pendant <= k)
    }

    fn accept(&self) -> Option<(EdgeMask, Option<usize>)> {
        let n = self.n;
        if let Some(k) = self.pendants {
            if self.deg[..n].iter().filter(|&&d| d == 1).count() != k {
                return None;
            }
        }
        if self.deg[..n].contains(&0) || !connected(&self.adj[..n]) {
            return None;
        }
        let cycles = match self.class {
            Some(class) => {
                let c = cycle_count_masked(&self.adj[..n], self.mask, &self.pairs, &self.index);
                if c != class.count() {
                    return None;
                }
                Some(c)
            }
            None => None,
        };
        Some((EdgeMask(self.mask), cycles))
    }

    /// Next accepted edge set in lexicographic order.
    pub fn next_mask(&mut self) -> Option<EdgeMask> {
        while !self.done {
            if self.stack.len() == self.m {
                let found = self.accept();
                self.backtrack();
                if let Some((mask, _)) = found {
                    return Some(mask);
                }
                continue;
            }
            let need = self.m - self.stack.len();
            if self.pos + need > self.pairs.len() {
                self.backtrack();
                continue;
            }
            let first = self.pairs[self.pos].0;
            if !self.finalized_ok(first) {
                self.backtrack();
                continue;
            }
            self.push(self.pos);
            self.pos += 1;
        }
        None
    }
}

/// Iterator over the graphs matching an [`EnumerationQuery`].
pub struct TricyclicGraphs {
    inner: Enumerator,
}

impl Iterator for TricyclicGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mask = self.inner.next_mask()?;
        Some(mask.to_graph(self.inner.n, &self.inner.pairs))
    }
}

/// Every labeled connected graph on `q.order` vertices with `q.order + 2`
/// edges that matches the pendant and class filters, each exactly once, in
/// lexicographic order of sorted edge lists.
pub fn enumerate_tricyclic(q: &EnumerationQuery) -> Result<TricyclicGraphs, SearchError> {
    q.validate()?;
    Ok(TricyclicGraphs { inner: Enumerator::new(q, &[]) })
}

/// Work partitions: all pairs of smallest edge indices, in lexicographic
/// order, so concatenating the partitions reproduces the global order.
pub(crate) fn partitions(n: usize) -> Vec<[usize; 2]> {
    let p = n * (n - 1) / 2;
    (0..p).flat_map(|a| (a + 1..p).map(move |b| [a, b])).collect()
}
