//! Test corpora: all labelled graphs of small order and seeded `G(n, p)`
//! samples.

use dompoly_core::generate::{labeled_graphs_up_to, vertex_pairs};
use dompoly_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi graph: each pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).expect("pairs are valid")
}

/// `count` graphs with orders drawn uniformly from `orders` and edge
/// probabilities from `probabilities`, reproducible from `seed`.
pub fn random_graphs(
    seed: u64,
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    probabilities: &[f64],
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            let p = probabilities[rng.gen_range(0..probabilities.len())];
            random_graph(&mut rng, n, p)
        })
        .collect()
}

pub fn exhaustive(max_n: usize) -> Vec<Graph> {
    labeled_graphs_up_to(max_n).collect()
}
