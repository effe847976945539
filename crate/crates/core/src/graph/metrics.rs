use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Largest order for which [`GraphMetrics::compute`] runs the exact clique search.
pub const CLIQUE_EXACT_LIMIT: usize = 16;

/// Non-negative rational `num / den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: u64,
    pub den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn floor(self) -> u64 {
        self.num / self.den
    }

    pub fn ceil(self) -> u64 {
        self.num.div_ceil(self.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMetrics {
    pub order: usize,
    pub size: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    /// `2m / n`.
    pub average_degree: Rational,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    pub clique_number: usize,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub is_overfull: bool,
}

impl GraphMetrics {
    pub fn compute(g: &Graph) -> Result<Self> {
        Self::compute_with_clique_limit(g, CLIQUE_EXACT_LIMIT)
    }

    pub fn compute_with_clique_limit(g: &Graph, clique_limit: usize) -> Result<Self> {
        let n = g.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > clique_limit {
            return Err(Error::ExactLimitExceeded {
                what: "clique number",
                limit: clique_limit,
                n,
            });
        }
        let m = g.size();
        let max_degree = g.max_degree();
        let diameter = diameter(g);
        Ok(GraphMetrics {
            order: n,
            size: m,
            max_degree,
            min_degree: g.min_degree(),
            average_degree: Rational::new(2 * m as u64, n as u64),
            diameter,
            clique_number: maximum_clique(g).len(),
            is_connected: diameter.is_some(),
            is_bipartite: is_bipartite(g),
            is_overfull: is_overfull(g),
        })
    }
}

/// All-pairs BFS; `None` for disconnected graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.order() {
        for d in g.distances_from(s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Edge indices of the cut edges (bridges).
pub fn bridges(g: &Graph) -> Vec<usize> {
    // Iterative Tarjan low-link.
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to enter it, next incidence position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, pos) = *top;
            if let Some(&(w, e)) = g.incident(v).get(pos) {
                top.2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(parent_edge);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// `n` odd and `m > Δ(n-1)/2`.
pub fn is_overfull(g: &Graph) -> bool {
    let n = g.order();
    n % 2 == 1 && 2 * g.size() > g.max_degree() * (n - 1)
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.order()];
    for start in 0..g.order() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for w in g.neighbours(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbours(u) {
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

/// A maximum clique, found by branch and bound over bitsets.
///
/// Vertices are tried in descending degree order; a branch is cut when the
/// current clique plus every remaining candidate cannot beat the incumbent.
/// Panics above 64 vertices.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(n <= 64, "maximum_clique supports at most 64 vertices");
    if n == 0 {
        return Vec::new();
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).fold(0u64, |acc, w| acc | (1 << w)))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut best = vec![order[0]];
    let mut current = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    expand(&adj, &order, all, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn expand(
    adj: &[u64],
    order: &[usize],
    mut candidates: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    for &v in order {
        if current.len() + candidates.count_ones() as usize <= best.len() {
            return;
        }
        if candidates & (1 << v) == 0 {
            continue;
        }
        current.push(v);
        let next = candidates & adj[v];
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, order, next, current, best);
        }
        current.pop();
        candidates &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, FamilySpec};

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn bridges_match_deletion_oracle() {
        for n in 2..=6 {
            for g in crate::graph::connected_catalogue(n) {
                let oracle: Vec<usize> = (0..g.size())
                    .filter(|&e| {
                        let rest = g
                            .edges()
                            .iter()
                            .enumerate()
                            .filter(|&(i, _)| i != e)
                            .map(|(_, &p)| p);
                        !Graph::from_edges(g.order(), rest).unwrap().is_connected()
                    })
                    .collect();
                assert_eq!(bridges(&g), oracle);
            }
        }
    }

    #[test]
    fn complete_five() {
        let m = GraphMetrics::compute(&gen("complete:5")).unwrap();
        assert_eq!(
            (m.max_degree, m.min_degree, m.diameter, m.clique_number),
            (4, 4, Some(1), 5)
        );
        assert!(m.is_overfull);
    }

    #[test]
    fn wheel_four_has_diameter_two() {
        let m = GraphMetrics::compute(&gen("wheel:4")).unwrap();
        assert_eq!(m.order, 5);
        assert_eq!(m.max_degree, 4);
        assert_eq!(m.diameter, Some(2));
    }

    #[test]
    fn f8_min_degree() {
        let m = GraphMetrics::compute(&FamilySpec::new(Family::F8, vec![]).generate().unwrap())
            .unwrap();
        assert_eq!((m.order, m.min_degree, m.max_degree), (8, 3, 3));
    }

    #[test]
    fn overfull_examples() {
        assert!(is_overfull(&gen("complete:3")));
        assert!(!is_overfull(&gen("complete_multipartite:1,1,2")));
    }

    #[test]
    fn girth_and_bipartite() {
        assert_eq!(girth(&gen("path:5")), None);
        assert_eq!(girth(&gen("cycle:7")), Some(7));
        assert_eq!(girth(&gen("petersen")), Some(5));
        assert!(is_bipartite(&gen("complete_bipartite:3,4")));
        assert!(!is_bipartite(&gen("cycle:5")));
    }

    #[test]
    fn clique_limit_is_enforced() {
        let err = GraphMetrics::compute(&gen("path:17")).unwrap_err();
        assert!(err.to_string().contains("exact limit exceeded"));
        assert!(GraphMetrics::compute_with_clique_limit(&gen("path:17"), 20).is_ok());
    }

    #[test]
    fn average_degree_is_exact() {
        let m = GraphMetrics::compute(&gen("path:4")).unwrap();
        assert_eq!(m.average_degree, Rational::new(3, 2));
        assert_eq!((m.average_degree.floor(), m.average_degree.ceil()), (1, 2));
    }
}
