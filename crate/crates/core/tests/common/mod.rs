//! Independent reference checks for the integration tests. Nothing here
//! calls into the library's checkers or solvers.

#![allow(dead_code)]

use prclab::{EdgeColouring, FamilySpec, Graph};

pub fn gen(spec: &str) -> Graph {
    spec.parse::<FamilySpec>().unwrap().generate().unwrap()
}

/// No two edges sharing an endpoint have the same colour.
pub fn naive_proper(g: &Graph, c: &[u32]) -> bool {
    let e = g.edges();
    (0..e.len()).all(|i| {
        (i + 1..e.len()).all(|j| {
            let touch =
                e[i].0 == e[j].0 || e[i].0 == e[j].1 || e[i].1 == e[j].0 || e[i].1 == e[j].1;
            !touch || c[i] != c[j]
        })
    })
}

/// Every pair is joined by a simple path with distinct colours, by
/// enumerating simple paths depth-first.
pub fn naive_rainbow(g: &Graph, c: &[u32]) -> bool {
    let n = g.order();
    (0..n).all(|s| (s + 1..n).all(|t| naive_pair(g, c, s, t)))
}

pub fn naive_pair(g: &Graph, c: &[u32], s: usize, t: usize) -> bool {
    fn go(
        g: &Graph,
        c: &[u32],
        v: usize,
        t: usize,
        on: &mut Vec<bool>,
        used: &mut Vec<u32>,
    ) -> bool {
        if v == t {
            return true;
        }
        for &(w, e) in g.incident(v) {
            if on[w] || used.contains(&c[e]) {
                continue;
            }
            on[w] = true;
            used.push(c[e]);
            let ok = go(g, c, w, t, on, used);
            used.pop();
            on[w] = false;
            if ok {
                return true;
            }
        }
        false
    }
    let mut on = vec![false; g.order()];
    on[s] = true;
    go(g, c, s, t, &mut on, &mut Vec::new())
}

/// The path is simple, uses edges of `g`, and has pairwise distinct colours.
pub fn path_is_rainbow(g: &Graph, c: &EdgeColouring, path: &[usize]) -> bool {
    let mut seen_v = std::collections::HashSet::new();
    let mut seen_c = std::collections::HashSet::new();
    path.iter().all(|&v| seen_v.insert(v))
        && path.windows(2).all(|w| match g.edge_index(w[0], w[1]) {
            Some(e) => seen_c.insert(c.colour(e)),
            None => false,
        })
}

/// BFS eccentricity maximum, or `None` if disconnected.
pub fn naive_diameter(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = 0;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbours(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(*dist.iter().max()?);
        if dist.contains(&usize::MAX) {
            return None;
        }
    }
    Some(best)
}

/// Smallest k for which `holds(k)`, scanning upward from `from`.
pub fn least(from: usize, mut holds: impl FnMut(usize) -> bool) -> usize {
    (from..).find(|&k| holds(k)).unwrap()
}

pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
