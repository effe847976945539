use super::Graph;
use crate::error::{Error, Result};

/// Cartesian product `G □ H`. Vertex `(a, b)` gets id `a * |H| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let width = h.order();
    let id = |a: usize, b: usize| a * width + b;
    let mut edges = Vec::with_capacity(g.order() * h.size() + h.order() * g.size());
    for a in 0..g.order() {
        for &(b1, b2) in h.edges() {
            edges.push((id(a, b1), id(a, b2)));
        }
    }
    for &(a1, a2) in g.edges() {
        for b in 0..width {
            edges.push((id(a1, b), id(a2, b)));
        }
    }
    Graph::from_edges(g.order() * width, edges)
}
