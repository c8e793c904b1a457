//! Constructive solvers for vertex-coloring edge-weightings.
//!
//! An edge weighting with weights from `{1, ..., k}` is vertex-coloring when
//! the induced colors (sum of incident edge weights) differ across every
//! edge. This crate builds such weightings for `k = 2` on the graph classes
//! where constructions are known, certifies nonexistence by exhaustive
//! enumeration on small graphs, and realizes arbitrary group-valued target
//! colorings on the way.
//!
//! The crate is `no_std` (alloc only); IO and file formats live in the
//! companion CLI crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod coloring;
mod error;
mod factor;
mod generate;
mod graph;
mod group;
mod oracle;
mod realize;
mod search;
mod solve;
mod strategies;
mod walk;
mod weighting;

pub use coloring::proper_partition;
pub use error::{Error, Result};
pub use factor::{choose_degree_bounds, find_degree_constrained_subgraph, DegreeBounds};
pub use generate::FamilySpec;
pub use graph::{Bipartition, Graph, MultiGraph};
pub use group::{GroupElement, GroupSpec};
pub use oracle::{
    brute_force_realization, brute_force_weighting, census, census_graph, census_jsonl_line,
    census_split, census_splits, census_summary_csv, BruteForceOutcome, CensusOptions, CensusRow,
    GroupBruteOutcome,
};
pub use realize::{realize_group_coloring, realize_parity, CorrectionRound, GroupRealization};
pub use search::{local_search_two_weighting, SearchBudget, SearchOutcome};
pub use solve::{solve, SolveOptions, SolveReport, SolveStatus};
pub use strategies::{
    detachable_neighbor_edges, strategy_chi_bound, strategy_parity,
    strategy_special_vertex_closed, strategy_special_vertex_open, strategy_three_connected,
    Applied, StrategyKind,
};
pub use walk::{even_walk, shortest_path, Walk};
pub use weighting::{
    lift_to_12, verify_weighting, GroupWeighting, IntWeighting, TargetColoring, VerifyOutcome,
};
