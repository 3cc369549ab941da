//! Simple graphs and hypergraphs.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("hyperedge {0:?} has fewer than two vertices")]
    HyperedgeTooSmall(Vec<usize>),
    #[error("duplicate hyperedge {0:?}")]
    DuplicateHyperedge(Vec<usize>),
}

/// Simple undirected graph on `0..num_vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(
        num_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_set(num_vertices, set))
    }

    fn from_set(num_vertices: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); num_vertices];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph {
            num_vertices,
            edges,
            adj,
        }
    }

    pub fn empty(num_vertices: usize) -> Self {
        Self::from_set(num_vertices, BTreeSet::new())
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid clique")
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.num_vertices()`.
    pub fn union(&self, other: &Graph) -> Graph {
        let off = self.num_vertices;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Self::from_set(off + other.num_vertices, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.num_vertices, "permutation length");
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        Self::from_set(self.num_vertices, edges)
    }
}

/// Hypergraph with hyperedges of size at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    num_vertices: usize,
    hyperedges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(
        num_vertices: usize,
        hyperedges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for mut e in hyperedges {
            e.sort_unstable();
            e.dedup();
            if e.len() < 2 {
                return Err(GraphError::HyperedgeTooSmall(e));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= num_vertices) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    num_vertices,
                });
            }
            if !set.insert(e.clone()) {
                return Err(GraphError::DuplicateHyperedge(e));
            }
        }
        Ok(Hypergraph {
            num_vertices,
            hyperedges: set,
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        Hypergraph {
            num_vertices: g.num_vertices(),
            hyperedges: g.edges().map(|(u, v)| vec![u, v]).collect(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_hyperedges(&self) -> usize {
        self.hyperedges.len()
    }

    /// Hyperedges in lexicographic order.
    pub fn hyperedges(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.hyperedges.iter().map(|e| e.as_slice())
    }
}
