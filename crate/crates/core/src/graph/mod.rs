//! Simple undirected graphs, the named families, graph operations and
//! structural predicates.
//!
//! Vertices are `0..n`. Edges are stored once as `(u, v)` with `u < v`, sorted
//! lexicographically, so two graphs with the same labeling compare equal
//! regardless of how they were built.

mod edgelist;
mod families;
mod ops;
mod structure;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list};
pub use families::{
    make_core_satellite, make_h_graph, make_kk_graph, make_named, make_pineapple, make_splitting,
    Family,
};
pub use ops::{cartesian, coalesce, direct, join, strong, union};
pub use structure::{structural_report, StructuralReport, TwinClass, TwinKind};

/// Index of a vertex. Validity is checked by the operation that consumes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, out-of-range endpoints and
    /// duplicate edges (in either orientation).
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop".into() });
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: format!("endpoint out of range for order {n}"),
                });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge".into() });
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    /// Caller guarantees `u < v < n` for every pair.
    pub(crate) fn from_edge_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph { n, edges: edges.into_iter().collect(), neighbors }
    }

    /// Normalizes orientation and drops loops; used by the operations, whose
    /// constructions can only produce valid pairs.
    pub(crate) fn from_pairs<I>(n: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let set = pairs
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Self::from_edge_set(n, set)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Validates `index` against this graph.
    pub fn vertex(&self, index: usize) -> Result<VertexId> {
        if index < self.n {
            Ok(VertexId(index))
        } else {
            Err(Error::InvalidVertex { vertex: index, order: self.n })
        }
    }

    /// `Some(k)` when every vertex has degree `k`. The null graph counts as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Two-coloring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &w in &self.neighbors[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}
