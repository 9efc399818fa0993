//! Exhaustive enumeration of labelled graphs.

use alloc::vec::Vec;

use crate::graph::Graph;

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices. Bit `k` of the
/// index selects the `k`-th pair of [`vertex_pairs`].
///
/// Panics if `n` is above 11, where the count no longer fits in 64 bits.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() < 64, "too many labelled graphs on {n} vertices");
    (0..1u64 << pairs.len()).map(move |bits| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(move |(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are distinct and in range")
    })
}

/// Labelled graphs on `0..=max_n` vertices.
pub fn labeled_graphs_up_to(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(labeled_graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=5).map(|n| labeled_graphs(n).count()).collect();
        assert_eq!(counts, [1, 1, 2, 8, 64, 1024]);
        assert_eq!(labeled_graphs_up_to(4).count(), 1 + 1 + 2 + 8 + 64);
    }

    #[test]
    fn first_and_last_are_empty_and_complete() {
        let all: Vec<Graph> = labeled_graphs(4).collect();
        assert_eq!(all[0], Graph::empty(4).unwrap());
        assert_eq!(all[63], Graph::complete(4).unwrap());
    }
}
