//! Simple undirected graphs, structural predicates and graph products.
//!
//! A [`Graph`] is immutable once built. Every constructor fixes its vertex
//! order so outputs are reproducible byte-for-byte:
//!
//! * disjoint union: the vertices of each operand in turn;
//! * Cartesian product: pairs `(u, v)` in lexicographic order, `u * |H| + v`;
//! * clique extension: vertex `v` becomes `v * s .. v * s + s`;
//! * line graph: edges `(i, j)`, `i < j`, in lexicographic order.

pub mod families;
pub mod graph6;

use std::collections::VecDeque;

use crate::error::FamilyError;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    // sorted, deduplicated, loop-free, symmetric
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(FamilyError::BadEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw(adj))
    }

    /// Builds a graph from a symmetric adjacency predicate on `0..n`.
    /// Only pairs `u < v` are queried.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            for u in 0..v {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Self::from_raw(adj)
    }

    fn from_raw(mut adj: Vec<Vec<usize>>) -> Self {
        for nb in &mut adj {
            nb.sort_unstable();
            nb.dedup();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Valency if every vertex has the same degree. The 0-vertex graph has no
    /// valency and yields `None`.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.adj.first()?.len();
        self.adj.iter().all(|nb| nb.len() == k).then_some(k)
    }

    /// True iff the graph has exactly one connected component. The 0-vertex
    /// graph has no components and is therefore not connected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_sets().len() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone graphs, relabelled in increasing
    /// vertex order.
    pub fn components(&self) -> Vec<Graph> {
        self.component_sets()
            .iter()
            .map(|set| self.induced_subgraph(set))
            .collect()
    }

    /// Subgraph induced by `vertices` (which must be sorted and distinct);
    /// vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|w| vertices.binary_search(w).ok())
                    .collect()
            })
            .collect();
        Graph::from_raw(adj)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|nb| nb.len() + 1 == n)
    }

    /// Part sizes `(a, b)` with `a <= b` if the graph is a complete bipartite
    /// graph `K_{a,b}` with `a >= 1`.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let n = self.n();
        if n < 2 {
            return None;
        }
        // Side of vertex 0 is its non-neighborhood; the other side is its neighborhood.
        let side: Vec<bool> = (0..n).map(|v| v != 0 && self.has_edge(0, v)).collect();
        let b = side.iter().filter(|&&s| s).count();
        let a = n - b;
        if b == 0 {
            return None;
        }
        for v in 0..n {
            let expected = if side[v] { a } else { b };
            if self.degree(v) != expected || self.adj[v].iter().any(|&w| side[w] == side[v]) {
                return None;
            }
        }
        Some((a.min(b), a.max(b)))
    }

    /// Graph on the same vertices with every non-edge turned into an edge
    /// and vice versa.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Disjoint union with block-diagonal adjacency, operands in order.
    pub fn disjoint_union<'a, I>(graphs: I) -> Graph
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        let mut adj = Vec::new();
        for g in graphs {
            let offset = adj.len();
            adj.extend(
                g.adj
                    .iter()
                    .map(|nb| nb.iter().map(|&w| w + offset).collect::<Vec<_>>()),
            );
        }
        Graph { adj }
    }

    /// Cartesian product: `(u, v) ~ (u', v')` iff one coordinate agrees and
    /// the other is an edge.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.n();
        let mut adj = vec![Vec::new(); self.n() * m];
        for u in 0..self.n() {
            for v in 0..m {
                let nb = &mut adj[u * m + v];
                nb.extend(self.adj[u].iter().map(|&u2| u2 * m + v));
                nb.extend(other.adj[v].iter().map(|&v2| u * m + v2));
            }
        }
        Graph::from_raw(adj)
    }

    /// Replaces every vertex by an `s`-clique; cliques of adjacent vertices
    /// are completely joined.
    pub fn clique_extension(&self, s: usize) -> Result<Graph, FamilyError> {
        if s == 0 {
            return Err(FamilyError::BadParams {
                family: "clique-ext".into(),
                reason: "clique size must be at least 1".into(),
            });
        }
        Ok(Graph::from_fn(self.n() * s, |x, y| {
            let (u, v) = (x / s, y / s);
            u == v || self.has_edge(u, v)
        }))
    }

    /// Line graph over the lexicographically sorted edge list.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges().collect();
        Graph::from_fn(edges.len(), |a, b| {
            let (p, q) = (edges[a], edges[b]);
            p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1
        })
    }
}
