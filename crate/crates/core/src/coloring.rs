//! Proper vertex partitions (color classes). The residue-class weighting
//! strategy needs the vertex set split into independent sets, as few as
//! practical; exact for small graphs, greedy beyond that.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Splits the vertices into independent classes. Exact (fewest classes)
/// when the graph has at most `exact_limit` vertices, greedy otherwise.
/// Classes are sorted by their smallest member; members ascend.
pub fn proper_partition(g: &Graph, exact_limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    if g.edge_count() == 0 {
        return vec![(0..n).collect()];
    }
    if let Some(bip) = g.bipartition() {
        let mut classes = vec![bip.left.clone()];
        if !bip.right.is_empty() {
            classes.push(bip.right.clone());
        }
        classes.sort_by_key(|c| c[0]);
        return classes;
    }
    let colors = if n <= exact_limit {
        exact_coloring(g)
    } else {
        greedy_coloring(g)
    };
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![Vec::new(); k];
    for v in 0..n {
        classes[colors[v]].push(v);
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Branch and bound over vertices in descending-degree order. Tries each
/// color count from 3 upward (bipartite is handled by the caller), so the
/// first success uses the fewest classes.
fn exact_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    for k in 3..=n {
        let mut colors = vec![usize::MAX; n];
        if try_color(g, &order, 0, k, 0, &mut colors) {
            return colors;
        }
    }
    unreachable!("every graph is colorable with n colors");
}

fn try_color(
    g: &Graph,
    order: &[usize],
    pos: usize,
    k: usize,
    used: usize,
    colors: &mut Vec<usize>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    // trying more than one fresh color only relabels classes
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if try_color(g, order, pos + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let mut colors = vec![usize::MAX; n];
    for &v in &order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}
