//! Realizing a prescribed vertex coloring by group-valued edge weights.
//!
//! Both realizers start from a cheap seed weighting and repeatedly repair
//! wrong vertices with walk corrections. The group version pushes a
//! difference along an even walk between two wrong vertices; the parity
//! version flips a shortest path. Each round strictly shrinks the set of
//! wrong vertices, so termination is structural, not heuristic.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::GroupElement;
use crate::walk::{even_walk, shortest_path};
use crate::weighting::{GroupWeighting, TargetColoring};

/// One repair round: which wrong vertices were attacked, how long the
/// correcting walk was, and the global state afterwards. `color_sum` is the
/// sum of all induced colors, which the group realizer must conserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectionRound {
    pub fixed_lo: usize,
    pub fixed_hi: usize,
    pub walk_len: usize,
    pub wrong_after: usize,
    pub color_sum: GroupElement,
}

/// A weighting realizing a target coloring, with its repair history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRealization {
    pub weighting: GroupWeighting,
    pub rounds: Vec<CorrectionRound>,
}

fn wrong_vertices(g: &Graph, w: &GroupWeighting, targets: &TargetColoring) -> Vec<usize> {
    let colors = w.induced_colors(g);
    (0..g.vertex_count())
        .filter(|&v| colors[v] != *targets.value(v))
        .collect()
}

/// Realizes `targets` exactly on a connected non-bipartite graph.
///
/// Needs the target sum to be of the form `h + h`: seeding one edge with `h`
/// makes the total color `2h` and walk corrections never change the total,
/// so the target sum being `2h` is necessary as well. Wrong vertices are
/// repaired pairwise: an even walk between the two lowest wrong vertices
/// gets `d` added on even steps and subtracted on odd steps, which shifts
/// only the two endpoint colors.
pub fn realize_group_coloring(g: &Graph, targets: &TargetColoring) -> Result<GroupRealization> {
    let spec = targets.spec().clone();
    if targets.len() != g.vertex_count() {
        return Err(Error::IncompleteWeighting {
            expected: g.vertex_count(),
            got: targets.len(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.is_bipartite() {
        return Err(Error::NotApplicable(String::from(
            "graph is bipartite, even walks cannot cross sides",
        )));
    }
    let halves = spec.halvings(&targets.sum());
    let h = halves.first().ok_or(Error::InfeasibleSum)?;

    let mut w = GroupWeighting::zero(&spec, g.edge_count());
    *w.weight_mut(0) = h.clone();

    let mut rounds = Vec::new();
    loop {
        let wrong = wrong_vertices(g, &w, targets);
        if wrong.is_empty() {
            return Ok(GroupRealization { weighting: w, rounds });
        }
        // the color total always equals the target total, so a lone wrong
        // vertex is impossible
        debug_assert!(wrong.len() >= 2);
        let (u, v) = (wrong[0], wrong[1]);
        let colors = w.induced_colors(g);
        let d = spec.sub(targets.value(u), &colors[u]);
        let walk = even_walk(g, u, v)?;
        for (step, (a, b)) in walk.steps().enumerate() {
            let idx = g.edge_index(a, b).expect("walk steps are edges");
            let adj = if step % 2 == 0 { d.clone() } else { spec.neg(&d) };
            *w.weight_mut(idx) = spec.add(w.weight_mut(idx), &adj);
        }
        let after = wrong_vertices(g, &w, targets);
        debug_assert!(after.len() < wrong.len());
        let color_sum = w
            .induced_colors(g)
            .iter()
            .fold(spec.zero(), |acc, c| spec.add(&acc, c));
        rounds.push(CorrectionRound {
            fixed_lo: u,
            fixed_hi: v,
            walk_len: walk.len(),
            wrong_after: after.len(),
            color_sum,
        });
    }
}

/// Realizes Z2 targets with an even number of ones on any connected graph.
///
/// Flipping every edge weight along a path toggles exactly the endpoint
/// colors, so wrong vertices can be cleared two at a time; with `2r` wrong
/// vertices initially this takes exactly `r` rounds.
pub fn realize_parity(g: &Graph, targets: &TargetColoring) -> Result<GroupRealization> {
    let spec = targets.spec().clone();
    if !spec.is_binary() {
        return Err(Error::NotBinaryGroup);
    }
    if targets.len() != g.vertex_count() {
        return Err(Error::IncompleteWeighting {
            expected: g.vertex_count(),
            got: targets.len(),
        });
    }
    let ones = targets
        .values()
        .iter()
        .filter(|t| t.coords()[0] == 1)
        .count();
    if ones % 2 != 0 {
        return Err(Error::InfeasibleParity);
    }
    if g.vertex_count() > 0 && !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let one = spec.element(&[1]).unwrap();
    let mut w = GroupWeighting::zero(&spec, g.edge_count());
    let mut rounds = Vec::new();
    loop {
        let wrong = wrong_vertices(g, &w, targets);
        if wrong.is_empty() {
            return Ok(GroupRealization { weighting: w, rounds });
        }
        debug_assert_eq!(wrong.len() % 2, 0);
        let (u, v) = (wrong[0], wrong[1]);
        let path = shortest_path(g, u, v)?;
        for (a, b) in path.steps() {
            let idx = g.edge_index(a, b).expect("path steps are edges");
            *w.weight_mut(idx) = spec.add(w.weight_mut(idx), &one);
        }
        let after = wrong_vertices(g, &w, targets);
        debug_assert_eq!(after.len(), wrong.len() - 2);
        let color_sum = w
            .induced_colors(g)
            .iter()
            .fold(spec.zero(), |acc, c| spec.add(&acc, c));
        rounds.push(CorrectionRound {
            fixed_lo: u,
            fixed_hi: v,
            walk_len: path.len(),
            wrong_after: after.len(),
            color_sum,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn group_realization_on_odd_cycle() {
        let g = cycle(5);
        let spec = GroupSpec::new(&[3]).unwrap();
        // target sum 1+2+0+1+2 = 6 = 0 mod 3, halving exists (0)
        let targets = TargetColoring::new(
            spec.clone(),
            [1u64, 2, 0, 1, 2]
                .iter()
                .map(|&c| spec.element(&[c]).unwrap())
                .collect(),
        )
        .unwrap();
        let real = realize_group_coloring(&g, &targets).unwrap();
        assert_eq!(real.weighting.induced_colors(&g), targets.values());
        let mut prev_wrong = usize::MAX;
        for round in &real.rounds {
            assert_eq!(round.color_sum, targets.sum());
            assert_eq!(round.walk_len % 2, 0);
            assert!(round.wrong_after < prev_wrong);
            prev_wrong = round.wrong_after;
        }
        assert_eq!(real.rounds.last().map(|r| r.wrong_after), Some(0));
    }

    #[test]
    fn group_realization_infeasible_sum() {
        let g = cycle(5);
        // sum is 1, which has no half in Z2
        let targets = TargetColoring::parity(&[true, false, false, false, false]);
        assert_eq!(
            realize_group_coloring(&g, &targets),
            Err(Error::InfeasibleSum)
        );
    }

    #[test]
    fn group_realization_rejects_bipartite() {
        let g = cycle(6);
        let targets = TargetColoring::parity(&[false; 6]);
        assert!(matches!(
            realize_group_coloring(&g, &targets),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn parity_path_example() {
        // path on 4 vertices, want odd color at the two middle vertices
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let targets = TargetColoring::parity(&[false, true, true, false]);
        let real = realize_parity(&g, &targets).unwrap();
        let coords: Vec<u64> = real
            .weighting
            .weights()
            .iter()
            .map(|w| w.coords()[0])
            .collect();
        // single flip of the middle edge does it
        assert_eq!(coords, vec![0, 1, 0]);
        assert_eq!(real.rounds.len(), 1);
    }

    #[test]
    fn parity_rejects_odd_ones() {
        let g = cycle(4);
        let targets = TargetColoring::parity(&[true, false, false, false]);
        assert_eq!(realize_parity(&g, &targets), Err(Error::InfeasibleParity));
    }

    #[test]
    fn parity_round_budget() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(2..10usize);
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_range(0..100) < 30 && !edges.contains(&(a, b)) {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let mut bits: Vec<bool> = (0..n).map(|_| rng.random_range(0..2) == 1).collect();
            if bits.iter().filter(|&&b| b).count() % 2 == 1 {
                let flip = bits.iter().position(|&b| b).unwrap();
                bits[flip] = false;
            }
            let targets = TargetColoring::parity(&bits);
            let real = realize_parity(&g, &targets).unwrap();
            let colors = real.weighting.induced_colors(&g);
            for v in 0..n {
                assert_eq!(colors[v].coords()[0], bits[v] as u64);
            }
            assert!(real.rounds.len() <= n / 2);
            // each path flip repairs exactly its two endpoints
            for (i, round) in real.rounds.iter().enumerate() {
                let expect = 2 * (real.rounds.len() - i - 1);
                assert_eq!(round.wrong_after, expect);
            }
        }
    }
}
