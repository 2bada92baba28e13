//! Exact maximum-weight independent set by branch and bound.
//!
//! Branching picks a maximum-degree vertex of the live subgraph and either
//! excludes it or includes it (deleting its closed neighborhood); the bound
//! is the total weight still reachable. Exponential in the worst case, but
//! the generating-subgraph pipeline only ever calls it on the tiny induced
//! subgraphs G[M_2].

use crate::graph::{Graph, VertexSet};

/// Returns an independent set of maximum total weight and that weight.
/// Weights are per-vertex and must match the vertex count.
pub fn max_weight_independent_set(g: &Graph, weights: &[u64]) -> (VertexSet, u64) {
    assert_eq!(
        weights.len(),
        g.n(),
        "one weight per vertex ({} vertices, {} weights)",
        g.n(),
        weights.len()
    );
    let live: Vec<usize> = (0..g.n()).collect();
    let remaining: u64 = weights.iter().sum();
    let mut best = Best {
        set: Vec::new(),
        weight: 0,
    };
    branch(g, weights, live, Vec::new(), 0, remaining, &mut best);
    (VertexSet::new(best.set), best.weight)
}

struct Best {
    set: Vec<usize>,
    weight: u64,
}

fn branch(
    g: &Graph,
    weights: &[u64],
    live: Vec<usize>,
    chosen: Vec<usize>,
    chosen_weight: u64,
    remaining: u64,
    best: &mut Best,
) {
    if chosen_weight > best.weight {
        best.weight = chosen_weight;
        best.set = chosen.clone();
    }
    if live.is_empty() || chosen_weight + remaining <= best.weight {
        return;
    }
    // Degree within the live subgraph; ties go to the smallest index.
    let pick = *live
        .iter()
        .max_by_key(|&&v| {
            (
                g.neighbors(v).iter().filter(|w| live.contains(w)).count(),
                std::cmp::Reverse(v),
            )
        })
        .expect("live is non-empty");

    // Include pick: drop its closed neighborhood.
    let include_live: Vec<usize> = live
        .iter()
        .copied()
        .filter(|&v| v != pick && !g.is_adjacent(v, pick))
        .collect();
    let include_remaining = include_live.iter().map(|&v| weights[v]).sum();
    let mut include_chosen = chosen.clone();
    include_chosen.push(pick);
    branch(
        g,
        weights,
        include_live,
        include_chosen,
        chosen_weight + weights[pick],
        include_remaining,
        best,
    );

    // Exclude pick.
    let exclude_live: Vec<usize> = live.iter().copied().filter(|&v| v != pick).collect();
    branch(
        g,
        weights,
        exclude_live,
        chosen,
        chosen_weight,
        remaining - weights[pick],
        best,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle;
    use rand::Rng;

    #[test]
    fn center_of_p3_beats_the_ends() {
        let g = corpus::path_graph(3);
        let (set, w) = max_weight_independent_set(&g, &[1, 5, 1]);
        assert_eq!(w, 5);
        assert_eq!(set, VertexSet::new(vec![1]));
    }

    #[test]
    fn c5_independence_number_is_two() {
        let g = corpus::cycle_graph(5);
        let (set, w) = max_weight_independent_set(&g, &[1; 5]);
        assert_eq!(w, 2);
        assert!(g.is_independent(&set));
    }

    #[test]
    fn edgeless_graph_takes_everything() {
        let g = Graph::new(3, []).unwrap();
        let (set, w) = max_weight_independent_set(&g, &[1, 2, 3]);
        assert_eq!(w, 6);
        assert_eq!(set, VertexSet::new(vec![0, 1, 2]));
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = corpus::seeded_rng(0x3157);
        for _ in 0..60 {
            let n = rng.gen_range(1..=9);
            let g = corpus::random_graph(n, 0.5, &mut rng);
            let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=20)).collect();
            let (set, w) = max_weight_independent_set(&g, &weights);
            assert!(g.is_independent(&set));
            assert_eq!(set.iter().map(|&v| weights[v]).sum::<u64>(), w);
            let best = oracle::all_independent_sets(&g)
                .into_iter()
                .map(|s| s.iter().map(|&v| weights[v]).sum::<u64>())
                .max()
                .unwrap();
            assert_eq!(w, best, "graph {:?} weights {weights:?}", g.edges());
        }
    }

    #[test]
    fn zero_weight_padding_never_changes_the_optimum() {
        let mut rng = corpus::seeded_rng(0x9d);
        for _ in 0..20 {
            let n = rng.gen_range(1..=6);
            let g = corpus::random_graph(n, 0.5, &mut rng);
            let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=9)).collect();
            let (_, w) = max_weight_independent_set(&g, &weights);
            // Add two isolated zero-weight vertices.
            let padded = Graph::new(n + 2, g.edges().iter().copied()).unwrap();
            let mut padded_weights = weights.clone();
            padded_weights.extend([0, 0]);
            let (_, w2) = max_weight_independent_set(&padded, &padded_weights);
            assert_eq!(w, w2);
        }
    }
}
