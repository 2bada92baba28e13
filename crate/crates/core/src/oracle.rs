//! Independent brute-force ground truth.
//!
//! Everything here bypasses the pipeline algorithms: weight spaces are
//! computed straight from the definition (one equal-weight equation per
//! pair of maximal sets), and hereditary systems are represented as
//! downward closures of explicit generator families so heredity holds by
//! construction. Deliberately simple, capped at desk scale.

use num::Zero;

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching, VertexSet};
use crate::linalg::{nullspace, Provenance, Rational, Restriction, WeightSpace};

/// Vertex cap for [`oracle_wcw`].
pub const WCW_VERTEX_CAP: usize = 12;
/// Edge cap for [`oracle_evs`].
pub const EVS_EDGE_CAP: usize = 24;

/// All independent sets, by plain subset iteration (n <= 16 expected).
pub fn all_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16, "subset iteration cap");
    let adj_masks = adjacency_masks(g);
    (0u32..(1 << n))
        .filter(|&mask| is_independent_mask(mask, &adj_masks))
        .map(|mask| mask_to_set(mask))
        .collect()
}

/// All maximal independent sets, in ascending subset-mask order.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16, "subset iteration cap");
    let adj_masks = adjacency_masks(g);
    (0u32..(1 << n))
        .filter(|&mask| {
            is_independent_mask(mask, &adj_masks)
                && (0..n).all(|v| {
                    mask >> v & 1 == 1 || !is_independent_mask(mask | 1 << v, &adj_masks)
                })
        })
        .map(mask_to_set)
        .collect()
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn is_independent_mask(mask: u32, adj_masks: &[u32]) -> bool {
    adj_masks
        .iter()
        .enumerate()
        .all(|(v, &nb)| mask >> v & 1 == 0 || mask & nb == 0)
}

fn mask_to_set(mask: u32) -> VertexSet {
    VertexSet::new((0..32).filter(|&v| mask >> v & 1 == 1).collect())
}

/// All matchings as sorted edge-index lists, found by backtracking over the
/// canonical edge order (subset iteration over edges is too slow for dense
/// hosts, and the tree has only about as many nodes as there are matchings).
pub fn all_matchings(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut covered = vec![false; g.n()];
    let mut current = Vec::new();
    matchings_rec(g, 0, &mut covered, &mut current, &mut |m| {
        out.push(m.to_vec())
    });
    out
}

/// All maximal matchings, as validated [`Matching`]s in deterministic order.
pub fn maximal_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut covered = vec![false; g.n()];
    let mut current = Vec::new();
    matchings_rec(g, 0, &mut covered, &mut current, &mut |m| {
        if g.is_maximal_matching(m) {
            out.push(Matching::new(g, m.iter().copied()).expect("enumerated matching"));
        }
    });
    out
}

fn matchings_rec(
    g: &Graph,
    next: usize,
    covered: &mut [bool],
    current: &mut Vec<usize>,
    sink: &mut impl FnMut(&[usize]),
) {
    if next == g.m() {
        sink(current);
        return;
    }
    // Skip edge `next`.
    matchings_rec(g, next + 1, covered, current, sink);
    let (u, v) = g.edge(next);
    if !covered[u] && !covered[v] {
        covered[u] = true;
        covered[v] = true;
        current.push(next);
        matchings_rec(g, next + 1, covered, current, sink);
        current.pop();
        covered[u] = false;
        covered[v] = false;
    }
}

/// A hereditary system given as the downward closure of explicit generator
/// sets over ground elements `0..ground`.
#[derive(Debug, Clone)]
pub struct HereditarySystem {
    ground: usize,
    generators: Vec<u32>,
}

/// Exhaustive-enumeration cap on the ground-set size.
pub const GROUND_CAP: usize = 20;

impl HereditarySystem {
    pub fn from_generators(
        ground: usize,
        generators: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        assert!(ground <= 32, "mask representation cap");
        let mut masks: Vec<u32> = generators
            .into_iter()
            .map(|set| {
                set.into_iter().fold(0u32, |m, e| {
                    assert!(e < ground, "generator element out of range");
                    m | 1 << e
                })
            })
            .collect();
        if masks.is_empty() {
            // The empty set is always feasible.
            masks.push(0);
        }
        masks.sort_unstable();
        masks.dedup();
        HereditarySystem {
            ground,
            generators: masks,
        }
    }

    /// The independence system of a graph: feasible sets are the
    /// independent vertex sets.
    pub fn independence_system(g: &Graph) -> Self {
        let gens = maximal_independent_sets(g)
            .into_iter()
            .map(|s| s.iter().copied().collect());
        HereditarySystem::from_generators(g.n(), gens)
    }

    /// The matching system of a graph over edge indices.
    pub fn matching_system(g: &Graph) -> Self {
        let gens = maximal_matchings(g)
            .into_iter()
            .map(|m| m.edge_indices().to_vec());
        HereditarySystem::from_generators(g.m(), gens)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn is_feasible(&self, set: &[usize]) -> bool {
        let mask = set.iter().fold(0u32, |m, &e| m | 1 << e);
        self.feasible_mask(mask)
    }

    fn feasible_mask(&self, mask: u32) -> bool {
        self.generators.iter().any(|&gen| mask & !gen == 0)
    }

    fn check_cap(&self) -> Result<()> {
        if self.ground > GROUND_CAP {
            return Err(Error::GroundSetTooLarge {
                size: self.ground,
                cap: GROUND_CAP,
            });
        }
        Ok(())
    }
}

/// All maximal feasible sets, each once, in ascending subset-mask order.
pub fn maximal_feasible_sets(h: &HereditarySystem) -> Result<Vec<Vec<usize>>> {
    Ok(maximal_feasible_masks(h)?
        .into_iter()
        .map(|m| mask_to_set(m).iter().copied().collect())
        .collect())
}

fn maximal_feasible_masks(h: &HereditarySystem) -> Result<Vec<u32>> {
    h.check_cap()?;
    let full: u32 = if h.ground == 32 {
        u32::MAX
    } else {
        (1 << h.ground) - 1
    };
    Ok((0u32..=full)
        .filter(|&mask| {
            mask & !full == 0
                && h.feasible_mask(mask)
                && (0..h.ground)
                    .all(|e| mask >> e & 1 == 1 || !h.feasible_mask(mask | 1 << e))
        })
        .collect())
}

/// Searches for the certificate of non-greediness: two maximal feasible
/// sets of different weights whose every single-swap extension of their
/// intersection is infeasible. Returns `None` iff the weighted system is
/// greedy (all maximal feasible sets share one weight).
///
/// The search maximizes the intersection size first; by the structure
/// theorem for weighted hereditary systems such an extremal pair always
/// satisfies the swap condition, which is re-checked before returning.
pub fn whs_witness(
    h: &HereditarySystem,
    weights: &[Rational],
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    assert_eq!(weights.len(), h.ground, "one weight per ground element");
    let maximal = maximal_feasible_masks(h)?;
    let weight_of = |mask: u32| -> Rational {
        (0..h.ground)
            .filter(|&e| mask >> e & 1 == 1)
            .map(|e| weights[e].clone())
            .fold(Rational::zero(), |acc, w| acc + w)
    };
    let set_weights: Vec<Rational> = maximal.iter().map(|&m| weight_of(m)).collect();
    let mut best: Option<(usize, usize)> = None;
    let mut best_common = 0;
    for i in 0..maximal.len() {
        for j in i + 1..maximal.len() {
            if set_weights[i] == set_weights[j] {
                continue;
            }
            let common = (maximal[i] & maximal[j]).count_ones();
            if best.is_none() || common > best_common {
                best = Some((i, j));
                best_common = common;
            }
        }
    }
    let Some((i, j)) = best else {
        return Ok(None);
    };
    let (f1, f2) = (maximal[i], maximal[j]);
    let common = f1 & f2;
    for e1 in (0..h.ground).filter(|&e| f1 >> e & 1 == 1 && f2 >> e & 1 == 0) {
        for e2 in (0..h.ground).filter(|&e| f2 >> e & 1 == 1 && f1 >> e & 1 == 0) {
            if h.feasible_mask(common | 1 << e1 | 1 << e2) {
                return Err(Error::Internal(format!(
                    "extremal pair admits a feasible swap ({e1}, {e2})"
                )));
            }
        }
    }
    Ok(Some((
        mask_to_set(f1).iter().copied().collect(),
        mask_to_set(f2).iter().copied().collect(),
    )))
}

/// Checks a claimed witness pair against the theorem's conditions.
pub fn verify_whs_witness(
    h: &HereditarySystem,
    weights: &[Rational],
    f1: &[usize],
    f2: &[usize],
) -> bool {
    let maximal = match maximal_feasible_sets(h) {
        Ok(sets) => sets,
        Err(_) => return false,
    };
    let sorted = |s: &[usize]| {
        let mut v = s.to_vec();
        v.sort_unstable();
        v
    };
    let (f1, f2) = (sorted(f1), sorted(f2));
    if !maximal.contains(&f1) || !maximal.contains(&f2) {
        return false;
    }
    let weight = |s: &[usize]| {
        s.iter()
            .map(|&e| weights[e].clone())
            .fold(Rational::zero(), |acc, w| acc + w)
    };
    if weight(&f1) == weight(&f2) {
        return false;
    }
    let common: Vec<usize> = f1.iter().copied().filter(|e| f2.contains(e)).collect();
    for &e1 in f1.iter().filter(|e| !f2.contains(e)) {
        for &e2 in f2.iter().filter(|e| !f1.contains(e)) {
            let mut swap = common.clone();
            swap.push(e1);
            swap.push(e2);
            if h.is_feasible(&swap) {
                return false;
            }
        }
    }
    true
}

/// Definitional WCW(G): one equal-weight restriction per maximal
/// independent set against the first one, then the exact nullspace.
pub fn oracle_wcw(g: &Graph) -> Result<(WeightSpace, Vec<Restriction>)> {
    if g.n() > WCW_VERTEX_CAP {
        return Err(Error::GroundSetTooLarge {
            size: g.n(),
            cap: WCW_VERTEX_CAP,
        });
    }
    let sets = maximal_independent_sets(g);
    let mut restrictions = Vec::new();
    for other in sets.iter().skip(1) {
        restrictions.push(Restriction::equal_sums(
            g.n(),
            sets[0].iter().copied(),
            other.iter().copied(),
            Provenance::MaximalIndependentPair {
                first: sets[0].clone(),
                second: other.clone(),
            },
        ));
    }
    let space = nullspace(&restrictions, g.n())?;
    Ok((space, restrictions))
}

/// Definitional EVS(G), over edge indices.
pub fn oracle_evs(g: &Graph) -> Result<(WeightSpace, Vec<Restriction>)> {
    if g.m() > EVS_EDGE_CAP {
        return Err(Error::GroundSetTooLarge {
            size: g.m(),
            cap: EVS_EDGE_CAP,
        });
    }
    let matchings = maximal_matchings(g);
    let mut restrictions = Vec::new();
    for other in matchings.iter().skip(1) {
        restrictions.push(Restriction::equal_sums(
            g.m(),
            matchings[0].edge_indices().iter().copied(),
            other.edge_indices().iter().copied(),
            Provenance::MaximalMatchingPair {
                first: matchings[0].clone(),
                second: other.clone(),
            },
        ));
    }
    let space = nullspace(&restrictions, g.m())?;
    Ok((space, restrictions))
}
