//! Simple undirected graphs with the structural queries the solvers need:
//! bipartition, component counts under vertex/edge deletion, vertex
//! connectivity, and induced subgraphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Two-coloring of a bipartite graph. `left` always contains the
/// lowest-numbered vertex of each component, so the split is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    side: Vec<u8>,
}

impl Bipartition {
    /// 0 if `v` is in `left`, 1 if in `right`.
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored in canonical form `(u, v)` with `u < v`, sorted
/// lexicographically, so edge indices are stable and output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    bip: Option<Bipartition>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges, and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut g = Graph {
            n,
            edges: canon,
            adj,
            bip: None,
        };
        g.bip = g.compute_bipartition();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order; the position of an edge in this slice is its
    /// index in every weighting.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// The canonical bipartition, or `None` if some component has an odd
    /// cycle. Computed once at construction.
    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bip.as_ref()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bip.is_some()
    }

    fn compute_bipartition(&self) -> Option<Bipartition> {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push(root);
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| side[v] == 0).collect();
        let right = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some(Bipartition { left, right, side })
    }

    /// Number of connected components after deleting the given vertices and
    /// edges. The empty graph has zero components.
    pub fn component_count(
        &self,
        removed_vertices: &[usize],
        removed_edges: &[(usize, usize)],
    ) -> usize {
        let gone_v: BTreeSet<usize> = removed_vertices.iter().copied().collect();
        let gone_e: BTreeSet<(usize, usize)> = removed_edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen[root] || gone_v.contains(&root) {
                continue;
            }
            count += 1;
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if seen[w]
                        || gone_v.contains(&w)
                        || gone_e.contains(&(v.min(w), v.max(w)))
                    {
                        continue;
                    }
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(&[], &[]) == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = Vec::new();
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Vertex connectivity. `n - 1` for complete graphs, 0 for disconnected
    /// or trivial graphs; otherwise the minimum over non-adjacent pairs of
    /// the pairwise vertex cut, computed by max-flow on the split network.
    pub fn vertex_connectivity(&self) -> usize {
        if self.n <= 1 {
            return 0;
        }
        if self.edge_count() == self.n * (self.n - 1) / 2 {
            return self.n - 1;
        }
        let mut best = self.n - 1;
        let mut net = SplitNetwork::new(self);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    continue;
                }
                best = best.min(net.local_connectivity(u, v));
                if best == 0 {
                    return 0;
                }
            }
        }
        best
    }

    /// Neighbors of `v` whose degree equals the minimum degree of the whole
    /// graph, in increasing order.
    pub fn delta_neighborhood(&self, v: usize) -> Vec<usize> {
        let delta = self.min_degree();
        self.adj[v]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) == delta)
            .collect()
    }

    /// Deletes the given vertices and edges, renumbering the remaining
    /// vertices. Returns the new graph and the map from new index to old.
    pub fn induced_subgraph(
        &self,
        drop_vertices: &[usize],
        drop_edges: &[(usize, usize)],
    ) -> (Graph, Vec<usize>) {
        let gone_v: BTreeSet<usize> = drop_vertices.iter().copied().collect();
        let gone_e: BTreeSet<(usize, usize)> = drop_edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !gone_v.contains(v)).collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| {
                !gone_v.contains(&u) && !gone_v.contains(&v) && !gone_e.contains(&(u, v))
            })
            .map(|&(u, v)| (old_to_new[u], old_to_new[v]))
            .collect();
        let g = Graph::new(keep.len(), &edges).expect("subgraph of a valid graph is valid");
        (g, keep)
    }

    /// Parses the text edge-list format: an `n m` header line followed by one
    /// `u v` line per edge. Blank lines and `#` comments are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        fn ints(line: &str, lineno: usize, want: usize) -> Result<Vec<usize>> {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != want {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected {want} integers, found {}", toks.len()),
                });
            }
            toks.iter()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad integer {t:?}"),
                    })
                })
                .collect()
        }

        let mut header: Option<(usize, usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            match header {
                None => {
                    let h = ints(line, lineno, 2)?;
                    header = Some((h[0], h[1], lineno));
                }
                Some((n, m, _)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("more than {m} edge lines"),
                        });
                    }
                    let e = ints(line, lineno, 2)?;
                    let (u, v) = (e[0], e[1]);
                    if u >= n || v >= n {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("vertex out of range (n = {n})"),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("self-loop at vertex {u}"),
                        });
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("duplicate edge {u} {v}"),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m, header_line) = header.ok_or(Error::Parse {
            line: 1,
            msg: String::from("missing header line"),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: header_line,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// Inverse of [`Graph::from_edge_list`], edges in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Flow network for pairwise vertex connectivity: every vertex is split into
/// an in/out pair joined by a unit arc, edges become arcs of unbounded
/// capacity in both directions.
struct SplitNetwork {
    nodes: usize,
    cap: Vec<i64>,
    base: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

const INF: i64 = i64::MAX / 4;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let nodes = 2 * n;
        let mut base = vec![0; nodes * nodes];
        let mut adj = vec![Vec::new(); nodes];
        let link = |a: usize, b: usize, c: i64, base: &mut Vec<i64>, adj: &mut Vec<Vec<usize>>| {
            if base[a * nodes + b] == 0 && base[b * nodes + a] == 0 {
                adj[a].push(b);
                adj[b].push(a);
            }
            base[a * nodes + b] += c;
        };
        for v in 0..n {
            link(2 * v, 2 * v + 1, 1, &mut base, &mut adj);
        }
        for &(u, v) in g.edges() {
            link(2 * u + 1, 2 * v, INF, &mut base, &mut adj);
            link(2 * v + 1, 2 * u, INF, &mut base, &mut adj);
        }
        SplitNetwork {
            nodes,
            cap: base.clone(),
            base,
            adj,
        }
    }

    /// Max-flow from `out(u)` to `in(v)`, which by Menger is the size of the
    /// smallest vertex set separating non-adjacent `u` and `v`.
    fn local_connectivity(&mut self, u: usize, v: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let (s, t) = (2 * u + 1, 2 * v);
        // the endpoints themselves must not be cut
        self.cap[2 * u * self.nodes + s] = INF;
        self.cap[t * self.nodes + (2 * v + 1)] = INF;
        let mut flow = 0usize;
        let mut prev = vec![usize::MAX; self.nodes];
        loop {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[s] = s;
            let mut queue = alloc::collections::VecDeque::new();
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &y in &self.adj[x] {
                    if prev[y] == usize::MAX && self.cap[x * self.nodes + y] > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            // unit capacities on the split arcs make every augmentation 1
            let mut y = t;
            while y != s {
                let x = prev[y];
                self.cap[x * self.nodes + y] -= 1;
                self.cap[y * self.nodes + x] += 1;
                y = x;
            }
            flow += 1;
        }
    }
}

/// Bipartite multigraph on `left + right` vertices, used when contracting
/// components against a set of minimum-degree neighbors.
#[derive(Debug, Clone)]
pub struct MultiGraph {
    left: usize,
    right: usize,
    mult: alloc::collections::BTreeMap<(usize, usize), usize>,
}

impl MultiGraph {
    pub fn new(left: usize, right: usize) -> Self {
        MultiGraph {
            left,
            right,
            mult: alloc::collections::BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right);
        *self.mult.entry((l, r)).or_insert(0) += 1;
    }

    pub fn multiplicity(&self, l: usize, r: usize) -> usize {
        self.mult.get(&(l, r)).copied().unwrap_or(0)
    }

    /// Degree of a left vertex counting multiplicities.
    pub fn left_degree(&self, l: usize) -> usize {
        self.mult
            .iter()
            .filter(|(&(a, _), _)| a == l)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    /// Distinct support edges as `(left, right)` pairs, lexicographic.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.mult.keys().copied().collect()
    }

    /// Finds a spanning tree whose degree on every left vertex is at most
    /// `left_cap`, or `None` if none exists. Exact backtracking over the
    /// support in lexicographic order, so the result is deterministic and,
    /// on failure, the nonexistence is conclusive.
    pub fn capped_spanning_tree(&self, left_cap: usize) -> Option<Vec<(usize, usize)>> {
        let nv = self.left + self.right;
        if nv == 0 {
            return Some(Vec::new());
        }
        let support = self.support();
        let mut chosen = Vec::new();
        let mut deg = vec![0usize; self.left];
        let mut dsu = Dsu::new(nv);
        if self.search(&support, 0, left_cap, &mut dsu, &mut deg, &mut chosen, nv) {
            Some(chosen)
        } else {
            None
        }
    }

    fn search(
        &self,
        support: &[(usize, usize)],
        idx: usize,
        cap: usize,
        dsu: &mut Dsu,
        deg: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
        nv: usize,
    ) -> bool {
        if chosen.len() == nv - 1 {
            return true;
        }
        if idx == support.len() {
            return false;
        }
        // optimistic check: even using every remaining edge, can the rest connect?
        let mut probe = dsu.clone();
        for &(l, r) in &support[idx..] {
            probe.union(l, self.left + r);
        }
        let root = probe.find(0);
        if (1..nv).any(|v| probe.find(v) != root) {
            return false;
        }
        let (l, r) = support[idx];
        let (a, b) = (l, self.left + r);
        if deg[l] < cap && dsu.find(a) != dsu.find(b) {
            let saved = dsu.clone();
            dsu.union(a, b);
            deg[l] += 1;
            chosen.push((l, r));
            if self.search(support, idx + 1, cap, dsu, deg, chosen, nv) {
                return true;
            }
            chosen.pop();
            deg[l] -= 1;
            *dsu = saved;
        }
        self.search(support, idx + 1, cap, dsu, deg, chosen, nv)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
