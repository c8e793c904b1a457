//! End-to-end solver. Splits into connected components, tries the
//! constructive strategies in a fixed order, falls back to exhaustive
//! enumeration (definitive within budget) and finally local search. Every
//! returned weighting has been re-verified against the input graph.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::brute_force_weighting;
use crate::search::{local_search_two_weighting, SearchBudget};
use crate::strategies::{
    strategy_chi_bound, strategy_parity, strategy_special_vertex_closed,
    strategy_special_vertex_open, strategy_three_connected, Applied, StrategyKind,
};
use crate::weighting::{verify_weighting, IntWeighting};

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub seed: u64,
    pub restarts: u32,
    pub flip_factor: u32,
    pub oracle_budget: u64,
    /// Run exactly one strategy instead of the pipeline.
    pub force: Option<StrategyKind>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seed: 0,
            restarts: 200,
            flip_factor: 10,
            oracle_budget: 1 << 24,
            force: None,
        }
    }
}

impl SolveOptions {
    fn search_budget(&self) -> SearchBudget {
        SearchBudget {
            restarts: self.restarts,
            flip_factor: self.flip_factor,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// A verified weighting was produced.
    Solved,
    /// Exhaustive enumeration proved no weighting exists.
    NoWeightingExists,
    /// Nothing applied and the search budget ran out; proves nothing.
    Unknown,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Solved => "Solved",
            SolveStatus::NoWeightingExists => "NoWeightingExists",
            SolveStatus::Unknown => "Unknown",
        }
    }
}

impl core::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub status: SolveStatus,
    pub strategy: Option<StrategyKind>,
    pub weighting: Option<IntWeighting>,
    pub colors: Option<Vec<u64>>,
    pub notes: Vec<(String, String)>,
}

impl SolveReport {
    fn negative(notes: Vec<(String, String)>, strategy: Option<StrategyKind>) -> Self {
        SolveReport {
            status: SolveStatus::NoWeightingExists,
            strategy,
            weighting: None,
            colors: None,
            notes,
        }
    }

    fn unknown(notes: Vec<(String, String)>) -> Self {
        SolveReport {
            status: SolveStatus::Unknown,
            strategy: None,
            weighting: None,
            colors: None,
            notes,
        }
    }

    fn solved(
        g: &Graph,
        weighting: IntWeighting,
        strategy: StrategyKind,
        notes: Vec<(String, String)>,
    ) -> Self {
        let outcome = verify_weighting(g, &weighting).expect("weighting covers all edges");
        debug_assert!(outcome.ok);
        SolveReport {
            status: SolveStatus::Solved,
            strategy: Some(strategy),
            weighting: Some(weighting),
            colors: Some(outcome.colors),
            notes,
        }
    }
}

/// Finds a proper {1,2}-weighting, proves none exists, or reports Unknown.
/// Never returns an error: anything that goes wrong inside a strategy is
/// recorded in the notes and the pipeline moves on.
pub fn solve(g: &Graph, opts: &SolveOptions) -> SolveReport {
    if let Some(kind) = opts.force {
        return solve_forced(g, opts, kind);
    }
    let comps = g.components();
    // a component that is a single edge can never separate its two colors
    for comp in &comps {
        if comp.len() == 2 {
            return SolveReport::negative(
                vec![(
                    String::from("obstruction"),
                    format!("component {{{},{}}} is a single edge", comp[0], comp[1]),
                )],
                None,
            );
        }
    }
    if comps.len() <= 1 {
        return solve_connected(g, opts);
    }

    let n = g.vertex_count();
    let mut merged = vec![0u32; g.edge_count()];
    let mut notes = Vec::new();
    let mut status = SolveStatus::Solved;
    let mut kinds: Vec<Option<StrategyKind>> = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        let mut keep = vec![false; n];
        for &v in comp {
            keep[v] = true;
        }
        let drop: Vec<usize> = (0..n).filter(|&v| !keep[v]).collect();
        let (sub, map) = g.induced_subgraph(&drop, &[]);
        let report = solve_connected(&sub, opts);
        notes.push((
            format!("component_{ci}_status"),
            report.status.as_str().to_string(),
        ));
        if let Some(k) = report.strategy {
            notes.push((format!("component_{ci}_strategy"), k.as_str().to_string()));
        }
        for (k, v) in &report.notes {
            notes.push((format!("component_{ci}.{k}"), v.clone()));
        }
        match report.status {
            SolveStatus::NoWeightingExists => status = SolveStatus::NoWeightingExists,
            SolveStatus::Unknown => {
                if status != SolveStatus::NoWeightingExists {
                    status = SolveStatus::Unknown;
                }
            }
            SolveStatus::Solved => {
                kinds.push(report.strategy);
                let w = report.weighting.expect("solved component has a weighting");
                for (j, &(a, b)) in sub.edges().iter().enumerate() {
                    let idx = g
                        .edge_index(map[a], map[b])
                        .expect("component edge exists in the whole graph");
                    merged[idx] = w.weights()[j];
                }
            }
        }
    }
    match status {
        SolveStatus::Solved => {
            // report one strategy only when every component used the same
            let first = kinds.first().copied().flatten();
            let uniform = kinds.iter().all(|&k| k == first);
            let strategy = if uniform { first } else { None };
            let weighting = IntWeighting::new(merged);
            let outcome = verify_weighting(g, &weighting).expect("weighting covers all edges");
            debug_assert!(outcome.ok);
            SolveReport {
                status: SolveStatus::Solved,
                strategy,
                weighting: Some(weighting),
                colors: Some(outcome.colors),
                notes,
            }
        }
        SolveStatus::NoWeightingExists => SolveReport::negative(notes, None),
        SolveStatus::Unknown => SolveReport::unknown(notes),
    }
}

fn solve_connected(g: &Graph, opts: &SolveOptions) -> SolveReport {
    let mut notes: Vec<(String, String)> = Vec::new();
    if g.vertex_count() == 2 && g.edge_count() == 1 {
        return SolveReport::negative(
            vec![(
                String::from("obstruction"),
                String::from("the graph is a single edge"),
            )],
            None,
        );
    }
    let budget = opts.search_budget();
    let order: &[StrategyKind] = if g.is_bipartite() {
        &[
            StrategyKind::Parity,
            StrategyKind::ThreeConnected,
            StrategyKind::SpecialVertexClosed,
            StrategyKind::SpecialVertexOpen,
            StrategyKind::ChiBound,
        ]
    } else {
        &[StrategyKind::ChiBound]
    };
    for &kind in order {
        match run_strategy(g, opts, kind) {
            Ok(applied) => {
                notes.extend(applied.notes.clone());
                return SolveReport::solved(g, applied.weighting, applied.kind, notes);
            }
            Err(Error::NotApplicable(reason)) => {
                notes.push((format!("not_applicable:{kind}"), reason));
            }
            Err(e) => {
                notes.push((format!("error:{kind}"), e.to_string()));
            }
        }
    }

    match brute_force_weighting(g, 2, opts.oracle_budget) {
        Ok(outcome) => {
            notes.push((
                String::from("enumerated"),
                outcome.enumerated.to_string(),
            ));
            return match outcome.witness {
                Some(w) => SolveReport::solved(g, w, StrategyKind::Oracle, notes),
                None => SolveReport::negative(notes, Some(StrategyKind::Oracle)),
            };
        }
        Err(Error::BudgetExceeded { needed, budget }) => {
            notes.push((
                String::from("oracle_skipped"),
                format!("needs {needed} assignments, budget {budget}"),
            ));
        }
        Err(e) => notes.push((String::from("error:oracle"), e.to_string())),
    }

    let outcome = local_search_two_weighting(g, &budget);
    match outcome.witness {
        Some((w, restart)) => {
            notes.push((String::from("restarts_used"), (restart + 1).to_string()));
            SolveReport::solved(g, w, StrategyKind::LocalSearch, notes)
        }
        None => {
            notes.push((
                String::from("local_search"),
                format!(
                    "no witness in {} restarts, best run left {} conflicts",
                    budget.restarts, outcome.best_conflicts
                ),
            ));
            SolveReport::unknown(notes)
        }
    }
}

fn run_strategy(
    g: &Graph,
    opts: &SolveOptions,
    kind: StrategyKind,
) -> crate::error::Result<Applied> {
    match kind {
        StrategyKind::Parity => strategy_parity(g),
        StrategyKind::ThreeConnected => {
            strategy_three_connected(g, &opts.search_budget(), opts.oracle_budget)
        }
        StrategyKind::SpecialVertexClosed => strategy_special_vertex_closed(g),
        StrategyKind::SpecialVertexOpen => strategy_special_vertex_open(g),
        StrategyKind::ChiBound => strategy_chi_bound(g, None, opts.seed),
        StrategyKind::RegularFallback
        | StrategyKind::Oracle
        | StrategyKind::LocalSearch => Err(Error::NotApplicable(format!(
            "{kind} is not a standalone constructive strategy"
        ))),
    }
}

/// Runs exactly one route on the whole graph, bypassing the component
/// split, and reports whatever it says.
fn solve_forced(g: &Graph, opts: &SolveOptions, kind: StrategyKind) -> SolveReport {
    let mut notes = vec![(String::from("forced"), kind.as_str().to_string())];
    match kind {
        StrategyKind::Oracle => match brute_force_weighting(g, 2, opts.oracle_budget) {
            Ok(outcome) => {
                notes.push((
                    String::from("enumerated"),
                    outcome.enumerated.to_string(),
                ));
                match outcome.witness {
                    Some(w) => SolveReport::solved(g, w, StrategyKind::Oracle, notes),
                    None => SolveReport::negative(notes, Some(StrategyKind::Oracle)),
                }
            }
            Err(e) => {
                notes.push((String::from("error:oracle"), e.to_string()));
                SolveReport::unknown(notes)
            }
        },
        StrategyKind::LocalSearch => {
            let outcome = local_search_two_weighting(g, &opts.search_budget());
            match outcome.witness {
                Some((w, restart)) => {
                    notes.push((String::from("restarts_used"), (restart + 1).to_string()));
                    SolveReport::solved(g, w, StrategyKind::LocalSearch, notes)
                }
                None => {
                    notes.push((
                        String::from("local_search"),
                        format!(
                            "no witness in {} restarts, best run left {} conflicts",
                            opts.restarts, outcome.best_conflicts
                        ),
                    ));
                    SolveReport::unknown(notes)
                }
            }
        }
        other => match run_strategy(g, opts, other) {
            Ok(applied) => {
                notes.extend(applied.notes.clone());
                SolveReport::solved(g, applied.weighting, applied.kind, notes)
            }
            Err(Error::NotApplicable(reason)) => {
                notes.push((format!("not_applicable:{other}"), reason));
                SolveReport::unknown(notes)
            }
            Err(e) => {
                notes.push((format!("error:{other}"), e.to_string()));
                SolveReport::unknown(notes)
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn note<'a>(report: &'a SolveReport, key: &str) -> Option<&'a str> {
        report
            .notes
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    #[test]
    fn even_cycles_certified_negative() {
        let report = solve(&cycle(6), &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::NoWeightingExists);
        assert_eq!(report.strategy, Some(StrategyKind::Oracle));
        assert_eq!(note(&report, "enumerated"), Some("64"));

        let report = solve(&cycle(10), &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::NoWeightingExists);
        assert_eq!(note(&report, "enumerated"), Some("1024"));
    }

    #[test]
    fn eight_cycle_is_solved() {
        let report = solve(&cycle(8), &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::Solved);
        let w = report.weighting.unwrap();
        assert!(verify_weighting(&cycle(8), &w).unwrap().ok);
    }

    #[test]
    fn path_goes_through_parity() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let report = solve(&g, &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::Solved);
        assert_eq!(report.strategy, Some(StrategyKind::Parity));
    }

    #[test]
    fn regular_three_connected_uses_fallback() {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                edges.push((i, 3 + j));
            }
        }
        let g = Graph::new(6, &edges).unwrap();
        let report = solve(&g, &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::Solved);
        assert_eq!(report.strategy, Some(StrategyKind::RegularFallback));
    }

    #[test]
    fn single_edge_is_an_obstruction() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let report = solve(&g, &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::NoWeightingExists);
        assert_eq!(report.strategy, None);
        assert!(note(&report, "obstruction").is_some());
    }

    #[test]
    fn components_merge_into_one_weighting() {
        // C4 plus a path on 3 vertices
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6)],
        )
        .unwrap();
        let report = solve(&g, &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::Solved);
        assert_eq!(report.strategy, Some(StrategyKind::Parity));
        let w = report.weighting.unwrap();
        assert!(verify_weighting(&g, &w).unwrap().ok);
        assert_eq!(report.colors.unwrap().len(), 7);
    }

    #[test]
    fn negative_component_decides_the_whole_graph() {
        // C5 has no proper {1,2}-weighting (adjacent weights two apart
        // around an odd cycle would 2-color it); the P3 beside it is fine
        let g = Graph::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6), (6, 7)],
        )
        .unwrap();
        let report = solve(&g, &SolveOptions::default());
        assert_eq!(report.status, SolveStatus::NoWeightingExists);
        assert_eq!(note(&report, "component_0_status"), Some("NoWeightingExists"));
        assert_eq!(note(&report, "component_1_status"), Some("Solved"));
    }

    #[test]
    fn forcing_runs_exactly_one_route() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut opts = SolveOptions::default();
        opts.force = Some(StrategyKind::Oracle);
        let report = solve(&g, &opts);
        assert_eq!(report.status, SolveStatus::Solved);
        assert_eq!(report.strategy, Some(StrategyKind::Oracle));

        // forcing parity on a non-bipartite graph reports honestly
        let triangle = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        opts.force = Some(StrategyKind::Parity);
        let report = solve(&triangle, &opts);
        assert_eq!(report.status, SolveStatus::Unknown);
        assert!(note(&report, "not_applicable:parity").is_some());
    }

    #[test]
    fn reports_are_deterministic() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let g = Graph::new(10, &edges).unwrap();
        let a = solve(&g, &SolveOptions::default());
        let b = solve(&g, &SolveOptions::default());
        assert_eq!(a, b);
    }
}
