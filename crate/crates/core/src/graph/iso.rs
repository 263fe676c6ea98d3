//! Isomorphism testing and canonical forms for small graphs.

use super::{Graph, GraphError};
use crate::spectra::{build_a_alpha, full_spectrum_oracle, ORACLE_MAX_ORDER};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 16;

const SPECTRUM_SCREEN_TOL: f64 = 1e-9;

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

fn adjacency_spectrum(g: &Graph) -> Vec<f64> {
    let a = build_a_alpha(g, 0.0).expect("alpha 0 is valid");
    full_spectrum_oracle(&a).expect("order checked by caller")
}

/// Exact isomorphism test: cheap invariant screening, then backtracking over
/// degree-compatible assignments.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || sorted_degrees(g) != sorted_degrees(h) {
        return false;
    }
    if g.order() <= ORACLE_MAX_ORDER {
        let (sg, sh) = (adjacency_spectrum(g), adjacency_spectrum(h));
        if sg.iter().zip(&sh).any(|(a, b)| (a - b).abs() > SPECTRUM_SCREEN_TOL) {
            return false;
        }
    }

    // Map vertices of g in BFS order (highest degree first per component) so
    // each new vertex is constrained by already-mapped neighbors.
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for root in by_degree {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_mapping(g, h, &order, 0, &mut map, &mut used)
}

fn extend_mapping(g: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else { return true };
    for candidate in 0..h.order() {
        if used[candidate] || h.degree(candidate) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(v, w) == h.has_edge(candidate, map[w]));
        if !consistent {
            continue;
        }
        map[v] = candidate;
        used[candidate] = true;
        if extend_mapping(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[candidate] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Canonical byte string: equal outputs exactly for isomorphic graphs.
///
/// Vertices are placed into positions whose degrees follow the descending
/// degree sequence. Among all such placements the one whose upper-triangular
/// adjacency bits, read column by column (`(0,1), (0,2), (1,2), (0,3), ...`),
/// form the lexicographically smallest string is chosen. The output is the
/// order as one byte followed by those bits packed most-significant first.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(GraphError::TooLarge { order: n, max: CANONICAL_MAX_ORDER });
    }
    let mut target = g.degrees();
    target.sort_unstable_by(|a, b| b.cmp(a));

    let mut search = CanonSearch {
        g,
        target,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        columns: vec![0; n],
        best: None,
    };
    search.run(0);
    let columns = search.best.unwrap_or_default();

    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (p, &column) in columns.iter().enumerate() {
        for i in 0..p {
            let bit = (column >> (p - 1 - i)) & 1;
            acc = (acc << 1) | bit as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    Ok(bytes)
}

/// Rebuilds the graph encoded by [`canonical_form`], in canonical labeling.
pub fn from_canonical(bytes: &[u8]) -> Option<Graph> {
    let (&n, packed) = bytes.split_first()?;
    let n = n as usize;
    let bit = |i: usize| packed.get(i / 8).map(|b| b >> (7 - i % 8) & 1 == 1);
    let mut edges = Vec::new();
    let mut k = 0;
    for p in 1..n {
        for i in 0..p {
            if bit(k)? {
                edges.push((i, p));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).ok()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    target: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    /// Column `p` holds the bits for pairs `(i, p)`, `i < p`, with `i = 0` the
    /// most significant, so integer order matches string order.
    columns: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl CanonSearch<'_> {
    fn run(&mut self, p: usize) {
        let n = self.g.order();
        if p == n {
            let better = match &self.best {
                None => true,
                Some(best) => self.columns < *best,
            };
            if better {
                self.best = Some(self.columns.clone());
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.g.degree(v) != self.target[p] {
                continue;
            }
            let mut column = 0u16;
            for &w in &self.perm {
                column = (column << 1) | u16::from(self.g.has_edge(w, v));
            }
            self.columns[p] = column;
            if let Some(best) = &self.best {
                if self.columns[..=p] > best[..=p] {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            self.run(p + 1);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c4 = Graph::cycle(4);
        let relabeled = c4.permuted(&[2, 0, 3, 1]);
        assert_ne!(c4, relabeled);
        assert!(are_isomorphic(&c4, &relabeled));
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&relabeled).unwrap());
    }

    #[test]
    fn star_and_path_differ() {
        assert!(!are_isomorphic(&Graph::star(3), &Graph::path(4)));
    }

    #[test]
    fn cospectral_pair_is_separated() {
        // K_{1,4} and C4 plus an isolated vertex share the adjacency spectrum.
        let star = Graph::star(4);
        let c4_k1 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&star, &c4_k1));
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&c4_k1).unwrap());
    }

    #[test]
    fn path_and_triangle_canonical_forms_differ() {
        assert_ne!(canonical_form(&Graph::path(3)).unwrap(), canonical_form(&Graph::cycle(3)).unwrap());
    }

    #[test]
    fn paw_canonical_form_is_labeling_invariant() {
        let g = paw();
        let reference = canonical_form(&g).unwrap();
        for perm in all_permutations(4) {
            assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), reference);
        }
    }

    #[test]
    fn canonical_form_is_the_brute_force_minimum() {
        // oracle: minimum over all n! relabelings whose degree sequence is
        // descending, reading bits column by column
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 4)]).unwrap();
        let mut best: Option<Vec<bool>> = None;
        for perm in all_permutations(6) {
            let h = g.permuted(&perm);
            let d = h.degrees();
            if d.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let bits: Vec<bool> = (1..6).flat_map(|p| (0..p).map(move |i| (i, p))).map(|(i, p)| h.has_edge(i, p)).collect();
            if best.as_ref().map_or(true, |b| bits < *b) {
                best = Some(bits);
            }
        }
        let bits = best.unwrap();
        let mut expected = vec![6u8];
        for chunk in bits.chunks(8) {
            let mut byte = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                byte |= u8::from(b) << (7 - i);
            }
            expected.push(byte);
        }
        assert_eq!(canonical_form(&g).unwrap(), expected);
    }

    #[test]
    fn decodes_canonical_form() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let code = canonical_form(&g).unwrap();
        let h = from_canonical(&code).unwrap();
        assert!(are_isomorphic(&g, &h));
        assert_eq!(canonical_form(&h).unwrap(), code);
    }

    #[test]
    fn order_limit() {
        assert!(matches!(canonical_form(&Graph::path(17)), Err(GraphError::TooLarge { .. })));
    }
}
