//! Small-graph corpora for verification sweeps: exhaustive labeled graphs
//! on few vertices and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// All vertex pairs `u < v` on `n` vertices, in lexicographic order. Bit `i`
/// of a graph mask selects the `i`-th pair.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The labeled graph on `n` vertices selected by `mask` over [`vertex_pairs`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = vertex_pairs(n);
    assert!(pairs.len() <= 63, "mask too small for n = {n}");
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("mask graphs are simple")
}

/// Iterates over all `2^(n choose 2)` labeled graphs on `n` vertices.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let count = 1u64 << (n * (n - 1) / 2);
    (0..count).map(move |mask| graph_from_mask(n, mask))
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, vertex_pairs(n)).expect("complete graph is simple")
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).expect("path is simple")
}

/// A deterministic RNG for seeded sweeps.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A G(n, p) graph drawn from `rng`, edges decided in canonical pair order.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges = vertex_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect::<Vec<_>>();
    Graph::new(n, edges).expect("random graphs are simple")
}
