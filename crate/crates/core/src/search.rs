//! Randomized search for weightings when no constructive route applies.
//! Walks on weight assignments, repairing conflicting edges one flip at a
//! time. Incomplete: failure to find a weighting proves nothing.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::weighting::{verify_weighting, IntWeighting};

/// Search effort knobs. `restarts` independent runs, each allowed
/// `flip_factor * edge_count` single-weight flips.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub restarts: u32,
    pub flip_factor: u32,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            restarts: 200,
            flip_factor: 10,
            seed: 0,
        }
    }
}

/// Conflicts among edges touching `a` or `b` only; flipping the weight of
/// edge `(a, b)` cannot change any other edge's status.
fn local_conflicts(g: &Graph, colors: &[u64], a: usize, b: usize) -> usize {
    let mut count = 0;
    for &w in g.neighbors(a) {
        if colors[a] == colors[w] {
            count += 1;
        }
    }
    for &w in g.neighbors(b) {
        if w != a && colors[b] == colors[w] {
            count += 1;
        }
    }
    count
}

/// What a search run produced: a witness (with the restart index that
/// found it), plus the fewest conflicts any restart ended with.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub witness: Option<(IntWeighting, u32)>,
    pub best_conflicts: usize,
}

/// Looks for a proper {1,2}-weighting by conflict-guided flips. Picks a
/// random conflicting edge, then flips whichever incident weight reduces
/// the conflict count most (with a dash of noise).
pub fn local_search_two_weighting(g: &Graph, budget: &SearchBudget) -> SearchOutcome {
    let m = g.edge_count();
    let n = g.vertex_count();
    if m == 0 {
        return SearchOutcome {
            witness: Some((IntWeighting::new(Vec::new()), 0)),
            best_conflicts: 0,
        };
    }
    let mut best_conflicts = usize::MAX;
    for restart in 0..budget.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(
            budget.seed ^ (restart as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        );
        let mut weights: Vec<u32> = (0..m).map(|_| rng.random_range(1..=2)).collect();
        let mut colors = vec![0u64; n];
        for (idx, &(u, v)) in g.edges().iter().enumerate() {
            colors[u] += weights[idx] as u64;
            colors[v] += weights[idx] as u64;
        }
        let mut conflicts: i64 = g
            .edges()
            .iter()
            .filter(|&&(u, v)| colors[u] == colors[v])
            .count() as i64;
        for _ in 0..budget.flip_factor as usize * m {
            if conflicts == 0 {
                break;
            }
            let bad: Vec<usize> = (0..m)
                .filter(|&i| {
                    let (u, v) = g.edges()[i];
                    colors[u] == colors[v]
                })
                .collect();
            let &(u, v) = &g.edges()[bad[rng.random_range(0..bad.len())]];
            // candidate flips: any edge touching the conflicting pair
            let mut candidates: Vec<usize> = Vec::new();
            for &x in [u, v].iter() {
                for &w in g.neighbors(x) {
                    candidates.push(g.edge_index(x, w).unwrap());
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            // flipping edge e changes conflict status only near its
            // endpoints, so deltas come from a local recount
            let delta = |e: usize, colors: &mut [u64]| -> i64 {
                let (a, b) = g.edges()[e];
                let shift: i64 = if weights[e] == 1 { 1 } else { -1 };
                let before = local_conflicts(g, colors, a, b) as i64;
                colors[a] = (colors[a] as i64 + shift) as u64;
                colors[b] = (colors[b] as i64 + shift) as u64;
                let after = local_conflicts(g, colors, a, b) as i64;
                colors[a] = (colors[a] as i64 - shift) as u64;
                colors[b] = (colors[b] as i64 - shift) as u64;
                after - before
            };
            let pick = if rng.random_range(0..100) < 15 {
                candidates[rng.random_range(0..candidates.len())]
            } else {
                let mut best = (i64::MAX, usize::MAX);
                for &e in &candidates {
                    let d = delta(e, &mut colors);
                    if (d, e) < best {
                        best = (d, e);
                    }
                }
                best.1
            };
            conflicts += delta(pick, &mut colors);
            let (a, b) = g.edges()[pick];
            let shift: i64 = if weights[pick] == 1 { 1 } else { -1 };
            weights[pick] = 3 - weights[pick];
            colors[a] = (colors[a] as i64 + shift) as u64;
            colors[b] = (colors[b] as i64 + shift) as u64;
        }
        if conflicts == 0 {
            let w = IntWeighting::new(weights);
            debug_assert!(verify_weighting(g, &w).map(|o| o.ok).unwrap_or(false));
            return SearchOutcome {
                witness: Some((w, restart)),
                best_conflicts: 0,
            };
        }
        best_conflicts = best_conflicts.min(conflicts as usize);
    }
    SearchOutcome {
        witness: None,
        best_conflicts,
    }
}
