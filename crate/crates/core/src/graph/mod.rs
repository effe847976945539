//! Simple undirected graphs with a canonical edge order.
//!
//! Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically.
//! The position of an edge in that list is its *edge index*; every edge
//! colouring in the crate is an array indexed by it.

mod catalogue;
mod edge_list;
pub(crate) mod families;
mod graph6;
mod iso;
mod metrics;
mod product;

pub use catalogue::{connected_catalogue, connected_catalogue_codes, CATALOGUE_MAX_ORDER};
pub use edge_list::{parse_edge_list, write_edge_list, EdgeListParse};
pub use families::{Family, FamilySpec};
pub use graph6::{parse_graph6, write_graph6};
pub use iso::is_isomorphic;
pub use metrics::{
    bridges, diameter, girth, is_bipartite, is_overfull, maximum_clique, GraphMetrics, Rational,
    CLIQUE_EXACT_LIMIT,
};
pub use product::cartesian_product;

use crate::error::{Error, Result};
use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per-vertex `(neighbour, edge index)`, sorted by neighbour.
    incidence: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Endpoint order is irrelevant;
    /// self-loops, out-of-range ids and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut incidence = vec![Vec::new(); n];
        for (idx, &(u, v)) in list.iter().enumerate() {
            incidence[u].push((v, idx));
            incidence[v].push((u, idx));
        }
        for row in &mut incidence {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            incidence,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Canonical index of the edge `uv`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let row = &self.incidence[u];
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|pos| row[pos].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbours(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.incidence[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, edge index)` pairs around `v`, sorted by neighbour.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incidence[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbours(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Graph induced on `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]));
        Graph::from_edges(keep.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("complement is simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}
