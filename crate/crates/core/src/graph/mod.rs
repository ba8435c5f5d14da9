//! Simple undirected graphs on vertices `1..=n`.
//!
//! Internally vertices are 0-based; every public constructor and every
//! serialized form uses the 1-based labels.

mod edge_list;
mod families;

pub use edge_list::{parse_edge_list, write_edge_list};
pub use families::{Family, FamilySpec};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) has a vertex outside 1..={n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({u}, {v}) is a self-loop")]
    SelfLoop { u: usize, v: usize },
    #[error("cannot delete {deleted} of {n} vertices: the result would be empty")]
    DeleteAll { deleted: usize, n: usize },
    #[error("vertex {v} is outside 1..={n}")]
    BadVertex { v: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    Family(String),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Immutable simple graph. Edges are kept as a sorted list of `(u, v)` with
/// `u < v` alongside sorted per-vertex neighbor lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges_one_based().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Builds a graph from 1-based vertex pairs. Duplicate and reversed pairs
    /// collapse into a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut zero_based = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { u, v });
            }
            zero_based.push((u - 1, v - 1));
        }
        Ok(Self::from_zero_based(n, zero_based))
    }

    /// Internal constructor; pairs must already be in range and loop-free.
    pub(crate) fn from_zero_based(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted 0-based edge list with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges_one_based(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1))
    }

    /// Sorted 0-based neighbors of the 0-based vertex `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Δ(G); zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of connected components, by breadth-first search.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Removes the 1-based vertices in `removed`. The survivors keep their
    /// relative order and are relabeled `1..=n-|U|`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<VertexDeletion, GraphError> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v == 0 || v > self.n {
                return Err(GraphError::BadVertex { v, n: self.n });
            }
            gone[v - 1] = true;
        }
        let deleted = gone.iter().filter(|&&g| g).count();
        if deleted == self.n {
            return Err(GraphError::DeleteAll { deleted, n: self.n });
        }
        let mut new_label = vec![None; self.n];
        let mut kept = Vec::with_capacity(self.n - deleted);
        for v in 0..self.n {
            if !gone[v] {
                new_label[v] = Some(kept.len());
                kept.push(v);
            }
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| Some((new_label[u]?, new_label[v]?))).collect();
        Ok(VertexDeletion { graph: Graph::from_zero_based(kept.len(), edges), kept })
    }

    /// Cartesian product `self × other`; vertex `(u1, u2)` is flattened
    /// row-major to `u1 * n2 + u2` (0-based).
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        let mut edges = Vec::with_capacity(self.n * other.size() + n2 * self.size());
        for u1 in 0..self.n {
            for &(a, b) in &other.edges {
                edges.push((u1 * n2 + a, u1 * n2 + b));
            }
        }
        for &(a, b) in &self.edges {
            for u2 in 0..n2 {
                edges.push((a * n2 + u2, b * n2 + u2));
            }
        }
        Graph::from_zero_based(self.n * n2, edges)
    }

    /// Subgraph induced on the given 0-based vertices, relabeled in the order
    /// given.
    pub(crate) fn induced(&self, vertices: &[usize]) -> Graph {
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| (label[u], label[v]))
            .collect();
        Graph::from_zero_based(vertices.len(), edges)
    }
}

/// Result of [`Graph::delete_vertices`].
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Graph,
    /// `kept[i]` is the 0-based original vertex now labeled `i`.
    pub kept: Vec<usize>,
}

impl VertexDeletion {
    /// 1-based original label of the 1-based new vertex `v`.
    pub fn original(&self, v: usize) -> usize {
        self.kept[v - 1] + 1
    }
}
