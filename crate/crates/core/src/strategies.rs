//! Constructive weighting strategies. Each one checks its own
//! preconditions and answers `NotApplicable` when they fail, so a caller
//! can try them in sequence. Every produced weighting is re-verified
//! before it is returned; a verification failure means the construction's
//! guarantee was broken and surfaces as `TheoremViolation`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::proper_partition;
use crate::error::{Error, Result};
use crate::factor::{choose_degree_bounds, find_degree_constrained_subgraph};
use crate::graph::{Graph, MultiGraph};
use crate::realize::realize_parity;
use crate::search::{local_search_two_weighting, SearchBudget};
use crate::weighting::{lift_to_12, verify_weighting, IntWeighting, TargetColoring};

/// Which construction produced a weighting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum StrategyKind {
    Parity,
    ThreeConnected,
    RegularFallback,
    SpecialVertexClosed,
    SpecialVertexOpen,
    ChiBound,
    Oracle,
    LocalSearch,
}

impl StrategyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StrategyKind::Parity => "parity",
            StrategyKind::ThreeConnected => "three-connected",
            StrategyKind::RegularFallback => "regular-fallback",
            StrategyKind::SpecialVertexClosed => "special-vertex-closed",
            StrategyKind::SpecialVertexOpen => "special-vertex-open",
            StrategyKind::ChiBound => "chi-bound",
            StrategyKind::Oracle => "oracle",
            StrategyKind::LocalSearch => "local-search",
        }
    }

    pub fn parse(s: &str) -> Option<StrategyKind> {
        Some(match s {
            "parity" => StrategyKind::Parity,
            "three-connected" => StrategyKind::ThreeConnected,
            "regular-fallback" => StrategyKind::RegularFallback,
            "special-vertex-closed" => StrategyKind::SpecialVertexClosed,
            "special-vertex-open" => StrategyKind::SpecialVertexOpen,
            "chi-bound" => StrategyKind::ChiBound,
            "oracle" => StrategyKind::Oracle,
            "local-search" => StrategyKind::LocalSearch,
            _ => return None,
        })
    }

    pub const ALL: [StrategyKind; 8] = [
        StrategyKind::Parity,
        StrategyKind::ThreeConnected,
        StrategyKind::RegularFallback,
        StrategyKind::SpecialVertexClosed,
        StrategyKind::SpecialVertexOpen,
        StrategyKind::ChiBound,
        StrategyKind::Oracle,
        StrategyKind::LocalSearch,
    ];
}

impl core::fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A successful strategy application: the weighting plus provenance notes.
#[derive(Debug, Clone)]
pub struct Applied {
    pub weighting: IntWeighting,
    pub kind: StrategyKind,
    pub notes: Vec<(String, String)>,
}

fn finish(
    g: &Graph,
    weights: Vec<u32>,
    kind: StrategyKind,
    notes: Vec<(String, String)>,
) -> Result<Applied> {
    let weighting = IntWeighting::new(weights);
    let outcome = verify_weighting(g, &weighting)?;
    if !outcome.ok {
        return Err(Error::TheoremViolation(format!(
            "{kind} construction left {} conflicting edges",
            outcome.conflicts.len()
        )));
    }
    Ok(Applied {
        weighting,
        kind,
        notes,
    })
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::NotApplicable(String::from("graph is disconnected")));
    }
    Ok(())
}

/// Bipartite graphs with an even side: target odd sums on the even side,
/// even sums on the other, and realize the parities along paths. Always
/// proper because the two sides end with different color parities.
pub fn strategy_parity(g: &Graph) -> Result<Applied> {
    require_connected(g)?;
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::NotApplicable(String::from("graph is not bipartite")))?;
    let (side_name, odd_side) = if bip.left.len() % 2 == 0 {
        ("left", 0u8)
    } else if bip.right.len() % 2 == 0 {
        ("right", 1u8)
    } else {
        return Err(Error::NotApplicable(String::from(
            "both sides have odd size",
        )));
    };
    let bits: Vec<bool> = (0..g.vertex_count())
        .map(|v| bip.side(v) == odd_side)
        .collect();
    let targets = TargetColoring::parity(&bits);
    let realization = realize_parity(g, &targets)?;
    let weights = lift_to_12(&realization.weighting)?;
    let notes = vec![
        (String::from("odd_color_side"), String::from(side_name)),
        (
            String::from("rounds"),
            realization.rounds.len().to_string(),
        ),
    ];
    finish(g, weights.weights().to_vec(), StrategyKind::Parity, notes)
}

/// Both sides odd: find a vertex `v` whose degree differs from all its
/// neighbors' degrees and whose removal together with its neighborhood
/// leaves the rest connected. Realize parities on the remainder (odd on
/// `v`'s side, even opposite), then put weight 2 on every edge touching
/// `N(v)`. Ends with `c(x) = 2 d(x)` for `x` in the closed neighborhood,
/// so the degree condition makes those edges proper.
pub fn strategy_special_vertex_closed(g: &Graph) -> Result<Applied> {
    require_connected(g)?;
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::NotApplicable(String::from("graph is not bipartite")))?;
    if bip.left.len() % 2 == 0 || bip.right.len() % 2 == 0 {
        return Err(Error::NotApplicable(String::from(
            "a side has even size",
        )));
    }
    let n = g.vertex_count();
    for v in 0..n {
        let neighbor_degrees: BTreeSet<usize> =
            g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        if neighbor_degrees.contains(&g.degree(v)) {
            continue;
        }
        let mut removed: Vec<usize> = g.neighbors(v).to_vec();
        removed.push(v);
        if g.component_count(&removed, &[]) > 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&removed, &[]);
        let bits: Vec<bool> = (0..sub.vertex_count())
            .map(|i| bip.side(map[i]) == bip.side(v))
            .collect();
        debug_assert_eq!(bits.iter().filter(|&&b| b).count() % 2, 0);
        let targets = TargetColoring::parity(&bits);
        let realization = realize_parity(&sub, &targets)?;
        let lifted = lift_to_12(&realization.weighting)?;
        let mut in_neighborhood = vec![false; n];
        for &w in g.neighbors(v) {
            in_neighborhood[w] = true;
        }
        let mut old_to_sub = vec![usize::MAX; n];
        for (i, &old) in map.iter().enumerate() {
            old_to_sub[old] = i;
        }
        let weights: Vec<u32> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if in_neighborhood[a] || in_neighborhood[b] {
                    2
                } else {
                    let e = sub
                        .edge_index(old_to_sub[a], old_to_sub[b])
                        .expect("edge outside N(v) survives in the subgraph");
                    lifted.weights()[e]
                }
            })
            .collect();
        let notes = vec![
            (String::from("pivot"), v.to_string()),
            (String::from("pivot_degree"), g.degree(v).to_string()),
        ];
        return finish(g, weights, StrategyKind::SpecialVertexClosed, notes);
    }
    Err(Error::NotApplicable(String::from(
        "no vertex has a locally unique degree with connected remainder",
    )))
}

/// Both sides odd: find a minimum-degree vertex `v` all of whose neighbors
/// have strictly larger degree, with `G - v` connected. Realize parities
/// on `G - v` so that after adding the weight-1 edges at `v`, the vertex
/// `v` finishes at color `d(v)`, strictly below every neighbor.
pub fn strategy_special_vertex_open(g: &Graph) -> Result<Applied> {
    require_connected(g)?;
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::NotApplicable(String::from("graph is not bipartite")))?;
    if bip.left.len() % 2 == 0 || bip.right.len() % 2 == 0 {
        return Err(Error::NotApplicable(String::from(
            "a side has even size",
        )));
    }
    let n = g.vertex_count();
    let delta = g.min_degree();
    for v in 0..n {
        if g.degree(v) != delta || !g.delta_neighborhood(v).is_empty() {
            continue;
        }
        if g.component_count(&[v], &[]) > 1 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&[v], &[]);
        let bits: Vec<bool> = (0..sub.vertex_count())
            .map(|i| {
                let x = map[i];
                let in_core = bip.side(x) == bip.side(v) || g.has_edge(v, x);
                in_core ^ (delta % 2 == 1)
            })
            .collect();
        debug_assert_eq!(bits.iter().filter(|&&b| b).count() % 2, 0);
        let targets = TargetColoring::parity(&bits);
        let realization = realize_parity(&sub, &targets)?;
        let lifted = lift_to_12(&realization.weighting)?;
        let mut old_to_sub = vec![usize::MAX; n];
        for (i, &old) in map.iter().enumerate() {
            old_to_sub[old] = i;
        }
        let weights: Vec<u32> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if a == v || b == v {
                    1
                } else {
                    let e = sub
                        .edge_index(old_to_sub[a], old_to_sub[b])
                        .expect("edge avoiding v survives in the subgraph");
                    lifted.weights()[e]
                }
            })
            .collect();
        let notes = vec![
            (String::from("pivot"), v.to_string()),
            (String::from("min_degree"), delta.to_string()),
        ];
        return finish(g, weights, StrategyKind::SpecialVertexOpen, notes);
    }
    Err(Error::NotApplicable(String::from(
        "no minimum-degree vertex has all-larger neighbors and connected remainder",
    )))
}

/// For a minimum-degree vertex `u` whose minimum-degree neighbors
/// `u_1 < ... < u_t` number at most `d(u) - 1`: one edge per `u_i`,
/// none incident to `u`, such that removing `u` and all chosen edges
/// leaves the graph connected. Chosen canonically: a spanning tree with
/// capped degrees on a component/neighbor incidence multigraph protects
/// one connecting edge per tree edge, and each `u_i` detaches its
/// lexicographically smallest unprotected edge.
///
/// Returns the chosen edges in ascending `u_i` order; empty when `u` has
/// no minimum-degree neighbors.
pub fn detachable_neighbor_edges(g: &Graph, u: usize) -> Result<Vec<(usize, usize)>> {
    require_connected(g)?;
    if g.bipartition().is_none() {
        return Err(Error::NotApplicable(String::from("graph is not bipartite")));
    }
    let delta = g.min_degree();
    if g.degree(u) != delta {
        return Err(Error::NotApplicable(format!(
            "vertex {u} has degree {} above the minimum {delta}",
            g.degree(u)
        )));
    }
    let low_neighbors = g.delta_neighborhood(u);
    let t = low_neighbors.len();
    if t == 0 {
        return Ok(Vec::new());
    }
    if t > delta - 1 {
        return Err(Error::NotApplicable(format!(
            "vertex {u} has {t} minimum-degree neighbors, more than {}",
            delta - 1
        )));
    }

    let mut removed: Vec<usize> = low_neighbors.clone();
    removed.push(u);
    let (rest, rest_map) = g.induced_subgraph(&removed, &[]);
    let comps = rest.components();
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    for (j, comp) in comps.iter().enumerate() {
        for &i in comp {
            comp_of[rest_map[i]] = j;
        }
    }

    // incidence multigraph: minimum-degree neighbors against components
    let mut h = MultiGraph::new(t, comps.len());
    for (i, &ui) in low_neighbors.iter().enumerate() {
        for &w in g.neighbors(ui) {
            if w != u {
                debug_assert_ne!(comp_of[w], usize::MAX);
                h.add_edge(i, comp_of[w]);
            }
        }
        debug_assert_eq!(h.left_degree(i), delta - 1);
    }
    let tree = h.capped_spanning_tree(delta - 2).ok_or_else(|| {
        Error::TheoremViolation(String::from(
            "no connector tree with capped neighbor degrees",
        ))
    })?;

    // protect one real edge per tree edge: the smallest edge from u_i into
    // the component it connects to
    let mut protected: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(i, j) in &tree {
        let ui = low_neighbors[i];
        let w = g
            .neighbors(ui)
            .iter()
            .copied()
            .find(|&w| w != u && comp_of[w] == j)
            .expect("tree edge has a witness in the graph");
        protected.insert((ui.min(w), ui.max(w)));
    }

    let mut detached = Vec::with_capacity(t);
    for &ui in &low_neighbors {
        let pick = g
            .neighbors(ui)
            .iter()
            .copied()
            .filter(|&w| w != u)
            .map(|w| (ui.min(w), ui.max(w)))
            .find(|e| !protected.contains(e))
            .ok_or_else(|| {
                Error::TheoremViolation(format!(
                    "every edge at neighbor {ui} is protected"
                ))
            })?;
        detached.push(pick);
    }

    if g.component_count(&[u], &detached) > 1 {
        return Err(Error::TheoremViolation(String::from(
            "detaching the chosen edges disconnected the remainder",
        )));
    }
    Ok(detached)
}

/// 3-connected bipartite graphs with both sides odd. Non-regular: pick a
/// minimum-degree vertex `u` with few minimum-degree neighbors, detach one
/// edge per such neighbor, realize parities on the remainder (so that `u`'s
/// side of the split finishes on the opposite parity from `d(u)`), then
/// weight detached edges 2 and all edges at `u` 1. The pivot ends at color
/// exactly `d(u)` while each neighbor clears it. Regular graphs (or graphs
/// where every minimum-degree vertex is crowded by minimum-degree
/// neighbors) go through a search fallback instead.
pub fn strategy_three_connected(g: &Graph, budget: &SearchBudget, oracle_budget: u64) -> Result<Applied> {
    require_connected(g)?;
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::NotApplicable(String::from("graph is not bipartite")))?;
    let kappa = g.vertex_connectivity();
    if kappa < 3 {
        return Err(Error::NotApplicable(format!(
            "vertex connectivity {kappa} is below 3"
        )));
    }
    if bip.left.len() % 2 == 0 || bip.right.len() % 2 == 0 {
        return Err(Error::NotApplicable(String::from(
            "a side has even size",
        )));
    }
    if g.is_regular() {
        return regular_fallback(g, budget, oracle_budget, "graph is regular");
    }
    let n = g.vertex_count();
    let delta = g.min_degree();
    for u in 0..n {
        if g.degree(u) != delta || g.delta_neighborhood(u).len() > delta - 1 {
            continue;
        }
        let detached = detachable_neighbor_edges(g, u)?;
        let (sub, map) = g.induced_subgraph(&[u], &detached);
        if !sub.is_connected() {
            return Err(Error::TheoremViolation(String::from(
                "remainder after detaching is disconnected",
            )));
        }
        let bits: Vec<bool> = (0..sub.vertex_count())
            .map(|i| {
                let x = map[i];
                let in_core = bip.side(x) == bip.side(u) || g.has_edge(u, x);
                in_core ^ (delta % 2 == 1)
            })
            .collect();
        debug_assert_eq!(bits.iter().filter(|&&b| b).count() % 2, 0);
        let targets = TargetColoring::parity(&bits);
        let realization = realize_parity(&sub, &targets)?;
        let lifted = lift_to_12(&realization.weighting)?;
        let detached_set: BTreeSet<(usize, usize)> = detached.iter().copied().collect();
        let mut old_to_sub = vec![usize::MAX; n];
        for (i, &old) in map.iter().enumerate() {
            old_to_sub[old] = i;
        }
        let weights: Vec<u32> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                if a == u || b == u {
                    1
                } else if detached_set.contains(&(a, b)) {
                    2
                } else {
                    let e = sub
                        .edge_index(old_to_sub[a], old_to_sub[b])
                        .expect("undetached edge avoiding u survives");
                    lifted.weights()[e]
                }
            })
            .collect();
        let detached_note = if detached.is_empty() {
            String::from("none")
        } else {
            let parts: Vec<String> = detached
                .iter()
                .map(|&(a, b)| format!("{a}-{b}"))
                .collect();
            parts.join(";")
        };
        let notes = vec![
            (String::from("pivot"), u.to_string()),
            (String::from("detached"), detached_note),
        ];
        return finish(g, weights, StrategyKind::ThreeConnected, notes);
    }
    regular_fallback(
        g,
        budget,
        oracle_budget,
        "every minimum-degree vertex is crowded by minimum-degree neighbors",
    )
}

/// Search fallback for 3-connected cases without a usable pivot. The
/// weighting is known to exist; local search usually finds it, and small
/// graphs fall back to exhaustive enumeration.
fn regular_fallback(
    g: &Graph,
    budget: &SearchBudget,
    oracle_budget: u64,
    why: &str,
) -> Result<Applied> {
    let outcome = local_search_two_weighting(g, budget);
    if let Some((weighting, restart)) = outcome.witness {
        let notes = vec![
            (String::from("fallback"), String::from(why)),
            (String::from("restarts_used"), (restart + 1).to_string()),
        ];
        return finish(
            g,
            weighting.weights().to_vec(),
            StrategyKind::RegularFallback,
            notes,
        );
    }
    let m = g.edge_count() as u32;
    if let Some(total) = 2u128.checked_pow(m).filter(|&t| t <= oracle_budget as u128) {
        let _ = total;
        let brute = crate::oracle::brute_force_weighting(g, 2, oracle_budget)?;
        match brute.witness {
            Some(weighting) => {
                let notes = vec![
                    (String::from("fallback"), String::from(why)),
                    (String::from("search"), String::from("exhaustive")),
                ];
                return finish(
                    g,
                    weighting.weights().to_vec(),
                    StrategyKind::RegularFallback,
                    notes,
                );
            }
            None => {
                return Err(Error::TheoremViolation(String::from(
                    "exhaustion found no weighting for a 3-connected bipartite graph",
                )))
            }
        }
    }
    Err(Error::SearchFailed {
        best_deficit: outcome.best_conflicts,
    })
}

/// Graphs whose minimum degree is at least eight times the number of color
/// classes: choose per-vertex degree bounds so that doubling a
/// degree-constrained subgraph pushes each class into its own residue band
/// modulo twice the class count.
pub fn strategy_chi_bound(
    g: &Graph,
    classes: Option<&[Vec<usize>]>,
    seed: u64,
) -> Result<Applied> {
    let owned;
    let classes: &[Vec<usize>] = match classes {
        Some(c) => c,
        None => {
            owned = proper_partition(g, 20);
            &owned
        }
    };
    let k = classes.len();
    if k == 0 {
        return Err(Error::NotApplicable(String::from("graph has no vertices")));
    }
    let delta = g.min_degree();
    if delta < 8 * k {
        return Err(Error::NotApplicable(format!(
            "minimum degree {delta} is below 8 * {k} classes"
        )));
    }
    let bounds = choose_degree_bounds(g, classes)?;
    let subgraph = find_degree_constrained_subgraph(g, &bounds, seed)?;
    let mut weights = vec![1u32; g.edge_count()];
    for &e in &subgraph {
        weights[e] = 2;
    }
    // residue check: class i (1-based) must land on colors 2i or 2i+1
    // modulo 2k
    let weighting = IntWeighting::new(weights);
    let colors = weighting.induced_colors(g);
    let modulus = (2 * k) as u64;
    for (idx, class) in classes.iter().enumerate() {
        let want = (2 * (idx as u64 + 1)) % modulus;
        for &v in class {
            let r = colors[v] % modulus;
            if r != want && r != (want + 1) % modulus {
                return Err(Error::TheoremViolation(format!(
                    "vertex {v} landed on residue {r}, class wants {want} or {}",
                    (want + 1) % modulus
                )));
            }
        }
    }
    let notes = vec![
        (String::from("classes"), k.to_string()),
        (String::from("min_degree"), delta.to_string()),
    ];
    finish(
        g,
        weighting.weights().to_vec(),
        StrategyKind::ChiBound,
        notes,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }

    fn cube_with_fan() -> Graph {
        // 3-cube on 0..8 (binary coordinates), plus vertex 8 joined to the
        // even-parity vertices 0, 3, 5
        let mut edges = Vec::new();
        for i in 0..8u32 {
            for b in [1u32, 2, 4] {
                let j = i ^ b;
                if i < j {
                    edges.push((i as usize, j as usize));
                }
            }
        }
        edges.push((0, 8));
        edges.push((3, 8));
        edges.push((5, 8));
        Graph::new(9, &edges).unwrap()
    }

    #[test]
    fn parity_on_even_side() {
        let g = complete_bipartite(3, 4);
        let applied = strategy_parity(&g).unwrap();
        assert_eq!(applied.kind, StrategyKind::Parity);
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        // right side (size 4) carries the odd colors
        for v in 3..7 {
            assert_eq!(outcome.colors[v] % 2, 1, "vertex {v}");
        }
        for v in 0..3 {
            assert_eq!(outcome.colors[v] % 2, 0, "vertex {v}");
        }
    }

    #[test]
    fn parity_rejects_two_odd_sides() {
        let g = complete_bipartite(3, 3);
        assert!(matches!(
            strategy_parity(&g),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn special_closed_picks_degree_isolated_vertex() {
        // sides {0,1,2} and {3..8}, both odd; vertex 1 has degree 2 while
        // its neighbors 3 and 4 have degree 3, and removing {1,3,4} leaves
        // 0-5, 0-6, 0-7, 2-5 connected
        let g = Graph::new(
            8,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let bip = g.bipartition().unwrap();
        assert_eq!(bip.left.len() % 2, 1);
        assert_eq!(bip.right.len() % 2, 1);
        let applied = strategy_special_vertex_closed(&g).unwrap();
        assert_eq!(applied.kind, StrategyKind::SpecialVertexClosed);
        let pivot: usize = applied
            .notes
            .iter()
            .find(|(k, _)| k == "pivot")
            .unwrap()
            .1
            .parse()
            .unwrap();
        assert_eq!(pivot, 1);
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        // the closed neighborhood finishes at twice its degree
        assert_eq!(outcome.colors[1], 2 * g.degree(1) as u64);
        assert_eq!(outcome.colors[3], 2 * g.degree(3) as u64);
        assert_eq!(outcome.colors[4], 2 * g.degree(4) as u64);
    }

    #[test]
    fn special_open_leaves_pivot_at_minimum() {
        let g = complete_bipartite(3, 5);
        let applied = strategy_special_vertex_open(&g).unwrap();
        assert_eq!(applied.kind, StrategyKind::SpecialVertexOpen);
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        // first minimum-degree vertex with all-larger neighbors is 3
        assert_eq!(outcome.colors[3], 3);
        for v in 0..3 {
            assert_eq!(outcome.colors[v], 9);
        }
        for v in 4..8 {
            assert_eq!(outcome.colors[v], 6);
        }
    }

    #[test]
    fn detachable_edges_on_cube_with_fan() {
        let g = cube_with_fan();
        assert_eq!(g.min_degree(), 3);
        // vertex 2 has one minimum-degree neighbor (6); the protected edge
        // into the remainder is (4,6), so 6 detaches (6,7)
        assert_eq!(detachable_neighbor_edges(&g, 2).unwrap(), vec![(6, 7)]);
        // vertex 6 is crowded: all three neighbors have minimum degree
        assert!(matches!(
            detachable_neighbor_edges(&g, 6),
            Err(Error::NotApplicable(_))
        ));
        // vertex 8's neighbors all have degree 4: nothing to detach
        assert_eq!(detachable_neighbor_edges(&g, 8).unwrap(), Vec::new());
    }

    #[test]
    fn detachable_edges_prefer_unprotected() {
        // sides {0,1,2,3} and {4..8}; vertex 4 has minimum-degree neighbor
        // 0 whose smallest remainder edge (0,5) is protected, so (0,6) is
        // detached
        let g = Graph::new(
            9,
            &[
                (0, 4),
                (0, 5),
                (0, 6),
                (1, 4),
                (1, 5),
                (1, 7),
                (1, 8),
                (2, 5),
                (2, 6),
                (2, 7),
                (2, 8),
                (3, 4),
                (3, 6),
                (3, 7),
                (3, 8),
            ],
        )
        .unwrap();
        assert_eq!(g.min_degree(), 3);
        assert_eq!(detachable_neighbor_edges(&g, 4).unwrap(), vec![(0, 6)]);
        // vertex 0 is itself minimum-degree but crowded (all of 4, 5, 6
        // have degree 3)
        assert!(matches!(
            detachable_neighbor_edges(&g, 0),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn three_connected_solves_uneven_complete_bipartite() {
        let g = complete_bipartite(3, 5);
        let applied =
            strategy_three_connected(&g, &SearchBudget::default(), 1 << 24).unwrap();
        assert_eq!(applied.kind, StrategyKind::ThreeConnected);
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        // the pivot sits at the minimum degree, strictly below every neighbor
        assert_eq!(outcome.colors[3], g.min_degree() as u64);
        for &w in g.neighbors(3) {
            assert!(outcome.colors[w] > outcome.colors[3]);
        }
    }

    #[test]
    fn three_connected_detaches_when_needed() {
        // both sides odd, 3-connected, vertex 0 has one minimum-degree
        // neighbor 5 after dropping the 2-5 edge
        let g = Graph::new(
            10,
            &[
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 5),
                (1, 6),
                (1, 7),
                (1, 8),
                (1, 9),
                (2, 6),
                (2, 8),
                (2, 9),
                (3, 6),
                (3, 7),
                (3, 8),
                (3, 9),
                (4, 5),
                (4, 7),
                (4, 8),
                (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(g.vertex_connectivity(), 3);
        assert!(!g.is_regular());
        let applied =
            strategy_three_connected(&g, &SearchBudget::default(), 1 << 24).unwrap();
        assert_eq!(applied.kind, StrategyKind::ThreeConnected);
        let pivot = applied
            .notes
            .iter()
            .find(|(k, _)| k == "pivot")
            .unwrap()
            .1
            .clone();
        assert_eq!(pivot, "0");
        let detached = applied
            .notes
            .iter()
            .find(|(k, _)| k == "detached")
            .unwrap()
            .1
            .clone();
        assert_eq!(detached, "4-5");
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        assert_eq!(outcome.colors[0], g.min_degree() as u64);
        for &w in g.neighbors(0) {
            assert!(outcome.colors[w] > outcome.colors[0]);
        }
    }

    #[test]
    fn three_connected_regular_goes_through_fallback() {
        let g = complete_bipartite(3, 3);
        let applied =
            strategy_three_connected(&g, &SearchBudget::default(), 1 << 24).unwrap();
        assert_eq!(applied.kind, StrategyKind::RegularFallback);
        assert!(verify_weighting(&g, &applied.weighting).unwrap().ok);
    }

    #[test]
    fn three_connected_rejects_low_connectivity() {
        // C8 is 2-connected only
        let edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        let g = Graph::new(8, &edges).unwrap();
        assert!(matches!(
            strategy_three_connected(&g, &SearchBudget::default(), 1 << 24),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn chi_bound_on_large_even_complete_bipartite() {
        let g = complete_bipartite(16, 16);
        let applied = strategy_chi_bound(&g, None, 0).unwrap();
        assert_eq!(applied.kind, StrategyKind::ChiBound);
        let outcome = verify_weighting(&g, &applied.weighting).unwrap();
        assert!(outcome.ok);
        // class 1 (left) on residues 2, 3 mod 4; class 2 (right) on 0, 1
        for v in 0..16 {
            assert!(matches!(outcome.colors[v] % 4, 2 | 3), "vertex {v}");
        }
        for v in 16..32 {
            assert!(matches!(outcome.colors[v] % 4, 0 | 1), "vertex {v}");
        }
    }

    #[test]
    fn chi_bound_on_large_odd_complete_bipartite() {
        let g = complete_bipartite(17, 17);
        let applied = strategy_chi_bound(&g, None, 0).unwrap();
        assert!(verify_weighting(&g, &applied.weighting).unwrap().ok);
    }

    #[test]
    fn chi_bound_rejects_small_degrees() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        let petersen = Graph::new(10, &edges).unwrap();
        assert!(matches!(
            strategy_chi_bound(&petersen, None, 0),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn strategy_kind_round_trips() {
        for kind in StrategyKind::ALL {
            assert_eq!(StrategyKind::parse(kind.as_str()), Some(kind));
        }
        assert_eq!(StrategyKind::parse("nonsense"), None);
    }
}
