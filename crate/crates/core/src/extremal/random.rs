//! Seeded random connected graphs for property trials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type TrialRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws each pair independently with probability `p` until the result is
/// connected. With `p = 0.5` this is uniform over labeled connected graphs.
pub fn random_connected_graph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    assert!(order >= 1 && p > 0.0, "need at least one vertex and positive density");
    loop {
        let edges: Vec<(usize, usize)> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::new(order, edges).expect("generated pairs are simple");
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform labeled connected graph with order drawn from `orders`.
pub fn uniform_connected_graph<R: Rng>(rng: &mut R, orders: std::ops::RangeInclusive<usize>) -> Graph {
    let n = rng.gen_range(orders);
    random_connected_graph(rng, n, 0.5)
}

/// Uniform labeled `r`-regular graph via the pairing model with rejection of
/// loops, multi-edges and disconnected results.
pub fn random_regular_graph<R: Rng>(rng: &mut R, order: usize, degree: usize) -> Option<Graph> {
    if order * degree % 2 != 0 || degree >= order {
        return None;
    }
    for _ in 0..10_000 {
        let mut points: Vec<usize> = (0..order).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
        for i in (1..points.len()).rev() {
            let j = rng.gen_range(0..=i);
            points.swap(i, j);
        }
        let edges: Vec<(usize, usize)> = points.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::new(order, edges) {
            if g.is_connected() {
                return Some(g);
            }
        }
    }
    None
}
