//! Exact weight spaces of graphs.
//!
//! For a graph `G` with vertex weights `w`, `G` is w-well-covered when all
//! maximal independent sets have the same total weight; the admissible `w`
//! form a vector space `WCW(G)`. With edge weights, `G` is w-equimatchable
//! when all maximal matchings have the same weight, giving the space
//! `EVS(G)`. This crate computes both exactly over the rationals:
//!
//! * [`wcw::wcw_space`] — `WCW(G)` for claw-free graphs, via generating
//!   subgraphs and a weighted-independent-set reduction;
//! * [`evs::evs_space`] — `EVS(G)` for arbitrary graphs, via symmetric
//!   differences of maximal matchings and maximum-weight matching;
//! * [`oracle`] — brute-force reference implementations that recompute
//!   both spaces from the definitions, used to verify everything else at
//!   desk scale.

pub mod corpus;
pub mod error;
pub mod evs;
pub mod graph;
pub mod linalg;
pub mod matching;
pub mod mwis;
pub mod oracle;
pub mod wcw;

pub use error::{Error, Result};
pub use evs::{
    cycle_sym_diff_witness, equimatchability_obstruction, evs_space, is_equimatchable,
    is_w_equimatchable, p4_paths_between, path_sym_diff_check, ScaledWeights, SymDiffWitness,
};
pub use graph::{
    parse_graph, BipartiteCore, Claw, CoreShape, CycleSpec, Graph, InducedSubgraph, LineGraphMap,
    Matching, PathSpec, VertexSet,
};
pub use linalg::{
    format_rational, nullspace, parse_rational, rat, ratio, Provenance, Rational, Restriction,
    WeightSpace,
};
pub use matching::{extend_to_maximal, max_weight_matching};
pub use mwis::max_weight_independent_set;
pub use oracle::{
    maximal_feasible_sets, maximal_independent_sets, maximal_matchings, oracle_evs, oracle_wcw,
    verify_whs_witness, whs_witness, HereditarySystem,
};
pub use wcw::{
    compute_m1_m2, is_generating, is_w_well_covered, is_well_covered, wcw_space,
    GeneratingVerdict,
};
