//! Digraphs, undirected graphs, neighborhoods and structural predicates.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::GraphError;

/// Largest vertex count any graph may have.
pub const MAX_VERTICES: usize = 4096;

/// A finite digraph on vertices `0..n` with an irreflexive arc relation.
///
/// Out- and in-adjacency are both stored so that every neighborhood query is
/// a single bitset lookup. Values are immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Builds a digraph from an arc list. Duplicate arcs collapse; self-loops and
/// out-of-range endpoints are rejected with the offending arc.
pub fn build_digraph<I>(n: usize, arcs: I) -> Result<Digraph, GraphError>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Digraph::from_arcs(n, arcs)
}

impl Digraph {
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut g = Digraph::arcless(n);
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.out_adj[u].insert(v);
            g.in_adj[v].insert(u);
        }
        Ok(g)
    }

    /// `n` vertices and no arcs.
    pub fn arcless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} vertices exceeds {MAX_VERTICES}");
        Digraph {
            n,
            out_adj: vec![VertexSet::new(n); n],
            in_adj: vec![VertexSet::new(n); n],
            labels: None,
        }
    }

    /// Symmetric digraph: every undirected edge becomes two opposite arcs.
    pub fn bidirected(g: &UndirectedGraph) -> Self {
        let mut d = Digraph::arcless(g.order());
        for v in 0..g.order() {
            d.out_adj[v] = g.neighbors(v).clone();
            d.in_adj[v] = g.neighbors(v).clone();
        }
        d
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, otherwise the index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).sum()
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_adj[u].iter().map(move |v| (u, v)))
    }

    /// N⁺(v)
    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out_adj[v]
    }

    /// N⁻(v)
    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.in_adj[v]
    }

    pub fn open_out_neighborhood(&self, v: usize) -> VertexSet {
        self.out_adj[v].clone()
    }

    pub fn closed_out_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.out_adj[v].clone();
        s.insert(v);
        s
    }

    pub fn open_in_neighborhood(&self, v: usize) -> VertexSet {
        self.in_adj[v].clone()
    }

    pub fn closed_in_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.in_adj[v].clone();
        s.insert(v);
        s
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    /// δ⁻; zero for the empty digraph.
    pub fn min_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    /// Δ⁺
    pub fn max_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).max().unwrap_or(0)
    }

    pub fn underlying_graph(&self) -> UndirectedGraph {
        let adj = (0..self.n)
            .map(|v| self.out_adj[v].union(&self.in_adj[v]))
            .collect();
        UndirectedGraph { n: self.n, adj }
    }

    pub fn underlying_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// True when the underlying graph is a tree.
    pub fn is_ditree(&self) -> bool {
        self.underlying_graph().is_tree()
    }

    /// True when there is no directed cycle (a topological order exists).
    /// Two opposite arcs form a directed 2-cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = queue.pop_front() {
            seen += 1;
            for w in self.out_adj[u].iter() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        seen == self.n
    }

    /// Leaf and support roles of every vertex, read off the underlying graph.
    pub fn classify_leaves(&self) -> Vec<LeafClass> {
        let un = self.underlying_graph();
        let is_leaf: Vec<bool> = (0..self.n).map(|v| un.degree(v) == 1).collect();
        (0..self.n)
            .map(|v| {
                let leaf = is_leaf[v].then(|| {
                    if self.in_degree(v) == 0 {
                        LeafKind::Isolated
                    } else {
                        LeafKind::NonIsolated
                    }
                });
                let leaf_neighbors = un.neighbors(v).iter().filter(|&w| is_leaf[w]).count();
                LeafClass {
                    leaf,
                    support: leaf_neighbors >= 1,
                    strong_support: leaf_neighbors >= 2,
                }
            })
            .collect()
    }

    /// Copy of `self` plus a new vertex `n` with the single arc `n -> attach_at`.
    pub fn with_isolated_leaf(&self, attach_at: usize) -> Result<Digraph, GraphError> {
        let n = self.n + 1;
        Digraph::from_arcs(n, self.arcs().chain(std::iter::once((self.n, attach_at))))
    }

    /// Number of arcs with both ends in `set`.
    pub fn induced_arc_count(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.out_adj[v].intersection_len(set)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    /// A leaf with no in-neighbors.
    Isolated,
    NonIsolated,
}

/// Roles of one vertex. A vertex can be a leaf and a support at once (both
/// ends of a single arc, for example).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeafClass {
    pub leaf: Option<LeafKind>,
    pub support: bool,
    pub strong_support: bool,
}

impl LeafClass {
    pub fn is_isolated_leaf(&self) -> bool {
        self.leaf == Some(LeafKind::Isolated)
    }

    pub fn is_non_isolated_leaf(&self) -> bool {
        self.leaf == Some(LeafKind::NonIsolated)
    }

    /// Neither a leaf nor a support.
    pub fn is_other(&self) -> bool {
        self.leaf.is_none() && !self.support
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl UndirectedGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut g = UndirectedGraph::edgeless(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Self {
        UndirectedGraph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = UndirectedGraph::edgeless(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        g
    }

    /// Builds a graph from adjacency rows, symmetrizing and dropping loops.
    pub(crate) fn from_rows(mut adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        for v in 0..n {
            adj[v].remove(v);
        }
        for u in 0..n {
            for v in adj[u].clone().iter() {
                adj[v].insert(u);
            }
        }
        UndirectedGraph { n, adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Length of a shortest cycle, or `None` for a forest. BFS from every vertex.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for w in self.adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}
