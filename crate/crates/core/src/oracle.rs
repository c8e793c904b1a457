//! Exhaustive ground truth. The brute-force enumerators check every
//! possible assignment, so their negative answers are certificates, and the
//! census runs solver and enumerator side by side over all small bipartite
//! graphs to catch disagreements.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{solve, SolveOptions, SolveStatus};
use crate::strategies::StrategyKind;
use crate::weighting::{GroupWeighting, IntWeighting, TargetColoring};

/// Result of an exhaustive run: the first witness in enumeration order, or
/// proof of absence once every assignment was checked. `enumerated` counts
/// the assignments actually inspected.
#[derive(Debug, Clone)]
pub struct BruteForceOutcome {
    pub witness: Option<IntWeighting>,
    pub enumerated: u64,
}

/// Tries every weighting with weights in `{1..k}` in counting order (edge 0
/// cycles fastest) and returns the first proper one. A `None` witness is a
/// certificate: all `k^m` assignments were checked.
pub fn brute_force_weighting(g: &Graph, k: u32, budget: u64) -> Result<BruteForceOutcome> {
    assert!(k >= 1, "weights need at least one value");
    let m = g.edge_count();
    let needed = (k as u128)
        .checked_pow(m as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let n = g.vertex_count();
    let mut weights = vec![1u32; m];
    let mut colors: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let mut enumerated: u64 = 0;
    loop {
        enumerated += 1;
        let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
        if proper {
            return Ok(BruteForceOutcome {
                witness: Some(IntWeighting::new(weights)),
                enumerated,
            });
        }
        // odometer step
        let mut i = 0;
        while i < m && weights[i] == k {
            let (u, v) = g.edges()[i];
            weights[i] = 1;
            colors[u] -= (k - 1) as u64;
            colors[v] -= (k - 1) as u64;
            i += 1;
        }
        if i == m {
            debug_assert_eq!(enumerated as u128, needed);
            return Ok(BruteForceOutcome {
                witness: None,
                enumerated,
            });
        }
        let (u, v) = g.edges()[i];
        weights[i] += 1;
        colors[u] += 1;
        colors[v] += 1;
    }
}

/// Like [`BruteForceOutcome`] for group-valued weightings.
#[derive(Debug, Clone)]
pub struct GroupBruteOutcome {
    pub witness: Option<GroupWeighting>,
    pub enumerated: u64,
}

/// Tries every group-valued weighting in counting order (edge 0 cycles
/// fastest through the group elements in lexicographic order) and returns
/// the first whose induced coloring equals `targets` exactly.
pub fn brute_force_realization(
    g: &Graph,
    targets: &TargetColoring,
    budget: u64,
) -> Result<GroupBruteOutcome> {
    if targets.len() != g.vertex_count() {
        return Err(Error::IncompleteWeighting {
            expected: g.vertex_count(),
            got: targets.len(),
        });
    }
    let spec = targets.spec().clone();
    let elements = spec.elements();
    let order = elements.len();
    let m = g.edge_count();
    let needed = (order as u128)
        .checked_pow(m as u32)
        .ok_or(Error::BudgetExceeded {
            needed: u128::MAX,
            budget,
        })?;
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }

    let n = g.vertex_count();
    let mut indices = vec![0usize; m];
    // all weights start at the zero element, so all colors are zero
    let mut colors = vec![spec.zero(); n];
    let mut enumerated: u64 = 0;
    loop {
        enumerated += 1;
        let matches = (0..n).all(|v| &colors[v] == targets.value(v));
        if matches {
            let weights: Vec<_> = indices.iter().map(|&j| elements[j].clone()).collect();
            return Ok(GroupBruteOutcome {
                witness: Some(GroupWeighting::new(spec, weights)),
                enumerated,
            });
        }
        let mut i = 0;
        while i < m && indices[i] == order - 1 {
            let (u, v) = g.edges()[i];
            let old = &elements[indices[i]];
            colors[u] = spec.sub(&colors[u], old);
            colors[v] = spec.sub(&colors[v], old);
            indices[i] = 0;
            i += 1;
        }
        if i == m {
            debug_assert_eq!(enumerated as u128, needed);
            return Ok(GroupBruteOutcome {
                witness: None,
                enumerated,
            });
        }
        let (u, v) = g.edges()[i];
        let old = &elements[indices[i]];
        colors[u] = spec.sub(&colors[u], old);
        colors[v] = spec.sub(&colors[v], old);
        indices[i] += 1;
        let new = &elements[indices[i]];
        colors[u] = spec.add(&colors[u], new);
        colors[v] = spec.add(&colors[v], new);
    }
}

/// One enumerated graph: the bipartite split sizes, the edge mask against
/// `K_{a,b}` (bit `i*b + j` is the edge between left `i` and right `a+j`),
/// what the solver said, and what exhaustion says.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub mask: u64,
    pub edges: usize,
    pub connectivity: usize,
    pub status: SolveStatus,
    pub strategy: Option<StrategyKind>,
    pub oracle_exists: bool,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub max_n: usize,
    pub oracle_budget: u64,
    pub solve: SolveOptions,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_n: 7,
            oracle_budget: 1 << 24,
            solve: SolveOptions::default(),
        }
    }
}

/// The `(a, b)` side splits covered by a census up to `max_n` vertices,
/// in output order.
pub fn census_splits(max_n: usize) -> Vec<(usize, usize)> {
    let mut splits = Vec::new();
    for n in 2..=max_n {
        for a in 1..=n / 2 {
            splits.push((a, n - a));
        }
    }
    splits
}

/// Builds the graph for one census coordinate.
pub fn census_graph(a: usize, b: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                edges.push((i, a + j));
            }
        }
    }
    Graph::new(a + b, &edges).expect("census masks encode simple bipartite graphs")
}

/// Enumerates every connected bipartite graph with the given side split,
/// skipping single-edge graphs (they trivially have no weighting and would
/// drown the listing). Masks ascend, so the output order is canonical.
pub fn census_split(a: usize, b: usize, opts: &CensusOptions) -> Result<Vec<CensusRow>> {
    let bits = a * b;
    assert!(bits < 64, "mask must fit in u64");
    let mut rows = Vec::new();
    for mask in 0u64..(1 << bits) {
        let g = census_graph(a, b, mask);
        if !g.is_connected() {
            continue;
        }
        if g.vertex_count() == 2 {
            continue;
        }
        let report = solve(&g, &opts.solve);
        let oracle = brute_force_weighting(&g, 2, opts.oracle_budget)?;
        rows.push(CensusRow {
            n: a + b,
            a,
            b,
            mask,
            edges: g.edge_count(),
            connectivity: g.vertex_connectivity(),
            status: report.status,
            strategy: report.strategy,
            oracle_exists: oracle.witness.is_some(),
        });
    }
    Ok(rows)
}

/// Full census over all splits up to `max_n` vertices.
pub fn census(opts: &CensusOptions) -> Result<Vec<CensusRow>> {
    let mut rows = Vec::new();
    for (a, b) in census_splits(opts.max_n) {
        rows.extend(census_split(a, b, opts)?);
    }
    Ok(rows)
}

/// One JSON object per row, fixed field order, no trailing newline.
pub fn census_jsonl_line(row: &CensusRow) -> String {
    let strategy = match row.strategy {
        Some(k) => format!("\"{}\"", k.as_str()),
        None => String::from("null"),
    };
    format!(
        "{{\"n\":{},\"a\":{},\"b\":{},\"mask\":{},\"edges\":{},\"connectivity\":{},\"status\":\"{}\",\"strategy\":{},\"oracle_exists\":{}}}",
        row.n,
        row.a,
        row.b,
        row.mask,
        row.edges,
        row.connectivity,
        row.status.as_str(),
        strategy,
        row.oracle_exists,
    )
}

/// Aggregate counts as `key,count` lines: total rows, per status, per
/// strategy. Fixed schema so two census runs can be diffed textually.
pub fn census_summary_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("key,count\n");
    out.push_str(&format!("rows,{}\n", rows.len()));
    for status in [
        SolveStatus::Solved,
        SolveStatus::NoWeightingExists,
        SolveStatus::Unknown,
    ] {
        let count = rows.iter().filter(|r| r.status == status).count();
        out.push_str(&format!("status:{},{}\n", status.as_str(), count));
    }
    for kind in StrategyKind::ALL {
        let count = rows.iter().filter(|r| r.strategy == Some(kind)).count();
        out.push_str(&format!("strategy:{},{}\n", kind.as_str(), count));
    }
    out
}
