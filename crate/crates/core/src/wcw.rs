//! The WCW(G) pipeline for claw-free graphs.
//!
//! Every induced complete bipartite subgraph (K_{1,1}, K_{1,2} or K_{2,2}
//! when the host is claw-free) is tested for being generating; each
//! generating core contributes the restriction `w(B_X) = w(B_Y)`, and the
//! weight space is the exact nullspace of the collected system.
//!
//! The generating test works on distance layers around the core. With
//! `d_X = d(v, B_X)` and `d_Y = d(v, B_Y)`:
//!
//! * `M_1` — vertices at `(1,2)` or `(2,1)`: they must be dominated by any
//!   witness.
//! * `M_2` — vertices at `(2,2)`, `(2,3)` or `(3,2)`: the only vertices
//!   that can dominate `M_1` from inside a witness.
//!
//! A witness exists iff an independent subset of `M_2` dominates `M_1`;
//! claw-freeness makes `|N(x) ∩ M_1|` additive over independent sets, so
//! the test reduces to one maximum-weight independent set computation on
//! `G[M_2]`. The emitted witness is extended to a maximal independent set
//! of the whole distance-two region, so that `witness ∪ B_X` and
//! `witness ∪ B_Y` are maximal independent sets of `G` and certificates
//! can be re-checked directly.

use crate::error::{Error, Result};
use crate::graph::{BipartiteCore, CoreShape, Graph, VertexSet};
use crate::linalg::{nullspace, Provenance, Rational, Restriction, WeightSpace};
use crate::mwis::max_weight_independent_set;

/// Outcome of the generating test for one bipartite core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingVerdict {
    pub is_generating: bool,
    /// Independent set `S` with `S ∪ B_X` and `S ∪ B_Y` maximal independent
    /// in the host graph; present iff the core is generating.
    pub witness: Option<VertexSet>,
    pub m1: VertexSet,
    pub m2: VertexSet,
}

/// Distance layers of one core: `M_1`, `M_2` and the full region at
/// distance >= 2 from both classes (where witnesses live).
struct CoreLayers {
    m1: VertexSet,
    m2: VertexSet,
    region: VertexSet,
}

fn core_layers(g: &Graph, core: &BipartiteCore) -> CoreLayers {
    let dx = g
        .distances_from(&core.b_x)
        .expect("core classes are non-empty");
    let dy = g
        .distances_from(&core.b_y)
        .expect("core classes are non-empty");
    let mut m1 = Vec::new();
    let mut m2 = Vec::new();
    let mut region = Vec::new();
    for v in 0..g.n() {
        match (dx[v], dy[v]) {
            (Some(1), Some(2)) | (Some(2), Some(1)) => m1.push(v),
            (Some(2), Some(2)) | (Some(2), Some(3)) | (Some(3), Some(2)) => m2.push(v),
            _ => {}
        }
        let far_x = dx[v].map_or(true, |d| d >= 2);
        let far_y = dy[v].map_or(true, |d| d >= 2);
        if far_x && far_y {
            region.push(v);
        }
    }
    CoreLayers {
        m1: VertexSet::new(m1),
        m2: VertexSet::new(m2),
        region: VertexSet::new(region),
    }
}

/// `M_1` and `M_2` for a core, per the layer definitions above.
pub fn compute_m1_m2(g: &Graph, core: &BipartiteCore) -> (VertexSet, VertexSet) {
    let layers = core_layers(g, core);
    (layers.m1, layers.m2)
}

/// Grows `seed` to a maximal independent set of `G[region]`, scanning
/// vertices in ascending order.
fn extend_to_maximal_independent(g: &Graph, region: &VertexSet, seed: &VertexSet) -> VertexSet {
    debug_assert!(seed.iter().all(|&v| region.contains(v)));
    let mut chosen: Vec<usize> = seed.iter().copied().collect();
    for &v in region.iter() {
        if chosen.contains(&v) {
            continue;
        }
        if chosen.iter().all(|&u| !g.is_adjacent(u, v)) {
            chosen.push(v);
        }
    }
    VertexSet::new(chosen)
}

/// Decides whether `core` is a generating subgraph of `g`. Verifies
/// claw-freeness first: the reduction to weighted independent sets is only
/// sound on claw-free hosts.
pub fn is_generating(g: &Graph, core: &BipartiteCore) -> Result<GeneratingVerdict> {
    if let Some(claw) = g.find_claw() {
        return Err(Error::ClawFound(claw));
    }
    let validated = BipartiteCore::new(g, core.b_x.clone(), core.b_y.clone(), core.shape)?;
    is_generating_claw_free(g, &validated)
}

/// The generating test proper; the caller guarantees claw-freeness.
fn is_generating_claw_free(g: &Graph, core: &BipartiteCore) -> Result<GeneratingVerdict> {
    let layers = core_layers(g, core);
    if core.shape == CoreShape::K22 {
        // Claw-freeness empties M_1 around an induced 4-cycle: a populated
        // M_1 here means the precondition was violated.
        if !layers.m1.is_empty() {
            return Err(Error::Internal(format!(
                "K22 core {core} has non-empty M_1 = {}",
                layers.m1
            )));
        }
        let witness = extend_to_maximal_independent(g, &layers.region, &VertexSet::empty());
        return Ok(GeneratingVerdict {
            is_generating: true,
            witness: Some(witness),
            m1: layers.m1,
            m2: layers.m2,
        });
    }
    if layers.m1.is_empty() {
        let witness = extend_to_maximal_independent(g, &layers.region, &VertexSet::empty());
        return Ok(GeneratingVerdict {
            is_generating: true,
            witness: Some(witness),
            m1: layers.m1,
            m2: layers.m2,
        });
    }
    // Weight each M_2 vertex by how many M_1 vertices it dominates. On a
    // claw-free graph no M_1 vertex has two non-adjacent M_2 neighbors, so
    // the weight of an independent set is exactly its domination count.
    let sub = g.induced_subgraph(&layers.m2);
    let weights: Vec<u64> = sub
        .vertex_map
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| layers.m1.contains(u))
                .count() as u64
        })
        .collect();
    let (best_set, best_weight) = max_weight_independent_set(&sub.graph, &weights);
    debug_assert!(best_weight <= layers.m1.len() as u64);
    if best_weight < layers.m1.len() as u64 {
        return Ok(GeneratingVerdict {
            is_generating: false,
            witness: None,
            m1: layers.m1,
            m2: layers.m2,
        });
    }
    let seed: VertexSet = best_set.iter().map(|&v| sub.vertex_map[v]).collect();
    let witness = extend_to_maximal_independent(g, &layers.region, &seed);
    debug_assert!(layers
        .m1
        .iter()
        .all(|&v| g.neighbors(v).iter().any(|&u| seed.contains(u))));
    Ok(GeneratingVerdict {
        is_generating: true,
        witness: Some(witness),
        m1: layers.m1,
        m2: layers.m2,
    })
}

/// Runs the full pipeline: rejects hosts with a claw, tests every core,
/// and solves the collected restriction system. Returns the weight space
/// together with the provenance-tagged restrictions.
pub fn wcw_space(g: &Graph) -> Result<(WeightSpace, Vec<Restriction>)> {
    if let Some(claw) = g.find_claw() {
        return Err(Error::ClawFound(claw));
    }
    let mut restrictions = Vec::new();
    for core in g.enumerate_bipartite_cores() {
        let verdict = is_generating_claw_free(g, &core)?;
        if verdict.is_generating {
            let witness = verdict.witness.expect("generating verdicts carry a witness");
            let b_x: Vec<usize> = core.b_x.iter().copied().collect();
            let b_y: Vec<usize> = core.b_y.iter().copied().collect();
            restrictions.push(Restriction::equal_sums(
                g.n(),
                b_x,
                b_y,
                Provenance::GeneratingSubgraph { core, witness },
            ));
        }
    }
    let space = nullspace(&restrictions, g.n())?;
    Ok((space, restrictions))
}

/// Membership of `w` in WCW(G).
pub fn is_w_well_covered(g: &Graph, w: &[Rational]) -> Result<bool> {
    let (space, _) = wcw_space(g)?;
    space.contains(w)
}

/// Membership of the all-ones function: the classical notion.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    let ones = vec![Rational::from_integer(1.into()); g.n()];
    is_w_well_covered(g, &ones)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::rat;
    use crate::oracle;

    fn k11(g: &Graph, u: usize, v: usize) -> BipartiteCore {
        BipartiteCore::new(
            g,
            VertexSet::new(vec![u]),
            VertexSet::new(vec![v]),
            CoreShape::K11,
        )
        .unwrap()
    }

    #[test]
    fn m1_m2_on_p3_edge_core() {
        let p3 = corpus::path_graph(3);
        let core = k11(&p3, 0, 1);
        let (m1, m2) = compute_m1_m2(&p3, &core);
        assert_eq!(m1, VertexSet::new(vec![2]));
        assert!(m2.is_empty());
    }

    #[test]
    fn m1_m2_on_p3_center_core() {
        let p3 = corpus::path_graph(3);
        let core = BipartiteCore::new(
            &p3,
            VertexSet::new(vec![1]),
            VertexSet::new(vec![0, 2]),
            CoreShape::K12,
        )
        .unwrap();
        let (m1, m2) = compute_m1_m2(&p3, &core);
        assert!(m1.is_empty());
        assert!(m2.is_empty());
    }

    #[test]
    fn m1_m2_empty_for_c4_diagonals() {
        let c4 = corpus::cycle_graph(4);
        let core = BipartiteCore::new(
            &c4,
            VertexSet::new(vec![0, 2]),
            VertexSet::new(vec![1, 3]),
            CoreShape::K22,
        )
        .unwrap();
        let (m1, m2) = compute_m1_m2(&c4, &core);
        assert!(m1.is_empty() && m2.is_empty());
        let verdict = is_generating(&c4, &core).unwrap();
        assert!(verdict.is_generating);
    }

    #[test]
    fn p3_edge_core_is_not_generating() {
        let p3 = corpus::path_graph(3);
        let verdict = is_generating(&p3, &k11(&p3, 0, 1)).unwrap();
        assert!(!verdict.is_generating);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn p3_center_core_is_generating_with_empty_witness() {
        let p3 = corpus::path_graph(3);
        let core = BipartiteCore::new(
            &p3,
            VertexSet::new(vec![1]),
            VertexSet::new(vec![0, 2]),
            CoreShape::K12,
        )
        .unwrap();
        let verdict = is_generating(&p3, &core).unwrap();
        assert!(verdict.is_generating);
        assert_eq!(verdict.witness, Some(VertexSet::empty()));
    }

    #[test]
    fn c5_edges_are_relating() {
        let c5 = corpus::cycle_graph(5);
        let verdict = is_generating(&c5, &k11(&c5, 0, 1)).unwrap();
        assert!(verdict.is_generating);
        assert_eq!(verdict.witness, Some(VertexSet::new(vec![3])));
        // The witness certifies two maximal independent sets.
        assert!(c5.is_maximal_independent(&VertexSet::new(vec![0, 3])));
        assert!(c5.is_maximal_independent(&VertexSet::new(vec![1, 3])));
    }

    #[test]
    fn wcw_space_of_p3() {
        let (space, restrictions) = wcw_space(&corpus::path_graph(3)).unwrap();
        assert_eq!(space.dimension(), 2);
        assert_eq!(restrictions.len(), 1);
        // w1 = w0 + w2
        assert!(space.contains(&[rat(1), rat(3), rat(2)]).unwrap());
        assert!(!space.contains(&[rat(1), rat(1), rat(1)]).unwrap());
    }

    #[test]
    fn wcw_space_of_c5_is_spanned_by_all_ones() {
        let (space, _) = wcw_space(&corpus::cycle_graph(5)).unwrap();
        assert_eq!(space.dimension(), 1);
        assert_eq!(space.basis()[0], vec![rat(1); 5]);
    }

    #[test]
    fn wcw_space_of_c4() {
        let (space, _) = wcw_space(&corpus::cycle_graph(4)).unwrap();
        assert_eq!(space.dimension(), 3);
        // w0 + w2 = w1 + w3
        assert!(space.contains(&[rat(2), rat(1), rat(0), rat(1)]).unwrap());
        assert!(!space.contains(&[rat(1), rat(0), rat(0), rat(0)]).unwrap());
    }

    #[test]
    fn claw_input_is_rejected_with_the_claw() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        match wcw_space(&star) {
            Err(Error::ClawFound(claw)) => {
                assert_eq!(claw.center, 0);
                assert_eq!(claw.leaves, [1, 2, 3]);
            }
            other => panic!("expected claw error, got {other:?}"),
        }
        assert!(is_well_covered(&star).is_err());
    }

    #[test]
    fn well_covered_fixtures() {
        assert!(is_well_covered(&corpus::cycle_graph(5)).unwrap());
        assert!(!is_well_covered(&corpus::path_graph(3)).unwrap());
        assert!(is_well_covered(&corpus::cycle_graph(7)).unwrap());
    }

    #[test]
    fn matches_oracle_on_small_claw_free_graphs() {
        for n in 1..=5 {
            for g in corpus::all_labeled_graphs(n) {
                if !g.is_claw_free() {
                    continue;
                }
                let (space, _) = wcw_space(&g).unwrap();
                let (reference, _) = oracle::oracle_wcw(&g).unwrap();
                assert!(
                    space.subspace_equal(&reference).unwrap(),
                    "graph {:?}: pipeline dim {} oracle dim {}",
                    g.edges(),
                    space.dimension(),
                    reference.dimension()
                );
            }
        }
    }

    #[test]
    fn every_witness_certifies_two_maximal_independent_sets() {
        for g in corpus::all_labeled_graphs(5) {
            if !g.is_claw_free() {
                continue;
            }
            let (_, restrictions) = wcw_space(&g).unwrap();
            for r in restrictions {
                let Provenance::GeneratingSubgraph { core, witness } = &r.provenance else {
                    panic!("wcw restrictions carry core provenance");
                };
                let s1 = witness.union(&core.b_x);
                let s2 = witness.union(&core.b_y);
                assert!(
                    g.is_maximal_independent(&s1) && g.is_maximal_independent(&s2),
                    "graph {:?} core {core} witness {witness}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn well_covered_agrees_with_oracle_cardinalities() {
        for n in 1..=5 {
            for g in corpus::all_labeled_graphs(n) {
                if !g.is_claw_free() {
                    continue;
                }
                let sets = oracle::maximal_independent_sets(&g);
                let all_same = sets.windows(2).all(|w| w[0].len() == w[1].len());
                assert_eq!(is_well_covered(&g).unwrap(), all_same);
            }
        }
    }
}
