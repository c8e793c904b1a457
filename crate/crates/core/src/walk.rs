//! Shortest walks with parity constraints. The group realizer pushes
//! corrections along even walks, so it needs shortest even walks between
//! arbitrary vertex pairs, which a BFS over (vertex, parity) states provides.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A walk as its vertex sequence. Vertices and edges may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges traversed.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive endpoint pairs, in traversal order (not canonicalized).
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Shortest walk of even length from `u` to `v`.
///
/// Fails with [`Error::Disconnected`] when `v` is unreachable and
/// [`Error::NoEvenWalk`] when only odd walks exist, which happens exactly
/// when `u` and `v` lie in different parts of a bipartite component.
pub fn even_walk(g: &Graph, u: usize, v: usize) -> Result<Walk> {
    parity_walk(g, u, v, 0)
}

/// Shortest plain path from `u` to `v` (no parity constraint).
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Result<Walk> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if !seen[v] {
        return Err(Error::Disconnected);
    }
    let mut vertices = vec![v];
    let mut cur = v;
    while cur != u {
        cur = prev[cur];
        vertices.push(cur);
    }
    vertices.reverse();
    Ok(Walk { vertices })
}

fn parity_walk(g: &Graph, u: usize, v: usize, want_parity: u8) -> Result<Walk> {
    let n = g.vertex_count();
    // state (x, p): reachable from u by a walk of parity p
    let mut prev = vec![usize::MAX; 2 * n];
    let mut seen = vec![false; 2 * n];
    let start = 2 * u;
    seen[start] = true;
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(start);
    while let Some(s) = queue.pop_front() {
        let (x, p) = (s / 2, s % 2);
        for &y in g.neighbors(x) {
            let t = 2 * y + (p ^ 1);
            if !seen[t] {
                seen[t] = true;
                prev[t] = s;
                queue.push_back(t);
            }
        }
    }
    let goal = 2 * v + want_parity as usize;
    if !seen[goal] {
        // distinguish "unreachable at all" from "wrong parity only"
        return if seen[2 * v] || seen[2 * v + 1] {
            Err(Error::NoEvenWalk { u, v })
        } else {
            Err(Error::Disconnected)
        };
    }
    let mut states = vec![goal];
    let mut cur = goal;
    while cur != start {
        cur = prev[cur];
        states.push(cur);
    }
    states.reverse();
    let vertices = states.into_iter().map(|s| s / 2).collect();
    Ok(Walk { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Step-by-step reachability closure: smallest even k such that v is
    /// reachable from u in exactly k steps. Independent of the BFS above.
    fn shortest_even_by_closure(g: &Graph, u: usize, v: usize) -> Option<usize> {
        let n = g.vertex_count();
        let mut reach: BTreeSet<usize> = BTreeSet::new();
        reach.insert(u);
        for k in 0..=2 * n + n {
            if k % 2 == 0 && reach.contains(&v) {
                return Some(k);
            }
            let mut next = BTreeSet::new();
            for &x in &reach {
                for &y in g.neighbors(x) {
                    next.insert(y);
                }
            }
            reach = next;
        }
        None
    }

    fn odd_girth(g: &Graph) -> Option<usize> {
        let n = g.vertex_count();
        (3..=n)
            .step_by(2)
            .find(|&k| (0..n).any(|v| walk_back(g, v, k)))
    }

    fn walk_back(g: &Graph, v: usize, k: usize) -> bool {
        let mut reach = BTreeSet::new();
        reach.insert(v);
        for _ in 0..k {
            let mut next = BTreeSet::new();
            for &x in &reach {
                next.extend(g.neighbors(x).iter().copied());
            }
            reach = next;
        }
        reach.contains(&v)
    }

    #[test]
    fn even_walk_on_odd_cycle() {
        let g = cycle(5);
        let w = even_walk(&g, 0, 1).unwrap();
        assert_eq!(w.vertices(), &[0, 4, 3, 2, 1]);
        assert_eq!(w.len(), 4);
        let same = even_walk(&g, 2, 2).unwrap();
        assert_eq!(same.len(), 0);
    }

    #[test]
    fn even_walk_errors() {
        let g = cycle(6);
        // opposite parts of a bipartite graph: only odd walks
        assert_eq!(even_walk(&g, 0, 1), Err(Error::NoEvenWalk { u: 0, v: 1 }));
        assert_eq!(even_walk(&g, 0, 2).unwrap().len(), 2);
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(even_walk(&split, 0, 2), Err(Error::Disconnected));
    }

    #[test]
    fn shortest_path_works() {
        let g = cycle(6);
        let p = shortest_path(&g, 0, 3).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.vertices()[0], 0);
        assert_eq!(*p.vertices().last().unwrap(), 3);
    }

    #[test]
    fn even_walk_matches_closure_and_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut checked = 0;
        for _ in 0..300 {
            let n = rng.random_range(2..8usize);
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    if rng.random_range(0..100) < 50 {
                        edges.push((a, b));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            for u in 0..n {
                for v in 0..n {
                    let expect = shortest_even_by_closure(&g, u, v);
                    match even_walk(&g, u, v) {
                        Ok(w) => {
                            assert_eq!(w.len() % 2, 0);
                            assert_eq!(Some(w.len()), expect);
                            assert_eq!(w.vertices()[0], u);
                            assert_eq!(*w.vertices().last().unwrap(), v);
                            for (a, b) in w.steps() {
                                assert!(g.has_edge(a, b));
                            }
                            if let Some(og) = odd_girth(&g) {
                                assert!(w.len() <= 2 * n + og);
                            }
                            checked += 1;
                        }
                        Err(_) => assert_eq!(expect, None),
                    }
                }
            }
        }
        assert!(checked > 1000);
    }
}
