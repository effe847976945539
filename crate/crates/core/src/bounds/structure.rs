//! Structural recognisers used to decide which claims apply to a graph.

use crate::graph::Graph;

pub fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * n.saturating_sub(1) / 2
}

/// Order of the cycle if `g` is one (n ≥ 3).
pub fn as_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    (n >= 3 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)).then_some(n)
}

/// Rim length `n` if `g` is the wheel `W_n` (a hub joined to every vertex of
/// a cycle `C_n`, n ≥ 4).
pub fn as_wheel(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 5 || g.size() != 2 * (n - 1) {
        return None;
    }
    let hub = (0..n).find(|&v| g.degree(v) == n - 1)?;
    let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    as_cycle(&g.induced(&rim))
}

/// Part sizes (sorted ascending) if `g` is complete multipartite with at
/// least two parts. Parts are the classes of the non-adjacency relation.
pub fn as_complete_multipartite(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut part = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        for w in v..n {
            if part[w] == usize::MAX && (w == v || !g.has_edge(v, w)) {
                part[w] = id;
                size += 1;
            }
        }
        sizes.push(size);
    }
    if sizes.len() < 2 {
        return None;
    }
    // Every part must be independent and every cross pair adjacent.
    let within: usize = sizes.iter().map(|&p| p * (p - 1) / 2).sum();
    let independent = g.edges().iter().all(|&(a, b)| part[a] != part[b]);
    if !independent || g.size() != n * (n - 1) / 2 - within {
        return None;
    }
    sizes.sort_unstable();
    Some(sizes)
}

/// `(s, t)` with `s ≤ t` if `g` is `K_{s,t}`.
pub fn as_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    match as_complete_multipartite(g)?.as_slice() {
        &[s, t] => Some((s, t)),
        _ => None,
    }
}

pub fn is_triangle(g: &Graph) -> bool {
    g.order() == 3 && g.size() == 3
}

/// A triangle with a path hanging off one of its vertices; order ≥ 4.
pub fn is_h_prime(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || g.size() != n || !g.is_connected() {
        return false;
    }
    let deg = |d: usize| (0..n).filter(|&v| g.degree(v) == d).collect::<Vec<_>>();
    let (three, one, two) = (deg(3), deg(1), deg(2));
    if three.len() != 1 || one.len() != 1 || two.len() != n - 2 {
        return false;
    }
    let hub = three[0];
    // The unique cycle must be a triangle through the degree-3 vertex.
    let nb: Vec<usize> = g.neighbours(hub).collect();
    nb.iter()
        .enumerate()
        .any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.has_edge(a, b)))
}

/// A triangle one of whose vertices carries at least two pendant vertices.
pub fn is_h_double_prime(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || g.size() != n {
        return false;
    }
    let Some(hub) = (0..n).find(|&v| g.degree(v) == n - 1) else {
        return false;
    };
    let pair: Vec<usize> = (0..n).filter(|&v| v != hub && g.degree(v) == 2).collect();
    pair.len() == 2 && g.has_edge(pair[0], pair[1])
}

/// A Hamiltonian cycle as a vertex sequence starting at 0, or `None`.
/// Plain backtracking; intended for small graphs.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    extend(g, &mut path, &mut used).then_some(path)
}

fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.order() {
        return g.has_edge(last, path[0]);
    }
    for w in g.neighbours(last) {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        if extend(g, path, used) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

/// A vertex `w` of maximum degree `Δ ≤ n − 2` together with a Hamiltonian
/// cycle of `G − N[w]` (vertex ids of `g`), trying candidates in id order.
pub fn hamiltonian_complement_witness(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.order();
    let delta = g.max_degree();
    if delta + 2 > n {
        return None;
    }
    for w in (0..n).filter(|&v| g.degree(v) == delta) {
        let mut keep = vec![true; n];
        keep[w] = false;
        for v in g.neighbours(w) {
            keep[v] = false;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        if let Some(cycle) = hamiltonian_cycle(&g.induced(&rest)) {
            return Some((w, cycle.into_iter().map(|i| rest[i]).collect()));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn recognises_families() {
        assert_eq!(as_wheel(&gen("wheel:6")), Some(6));
        assert_eq!(as_wheel(&gen("complete:5")), None);
        assert_eq!(as_cycle(&gen("cycle:7")), Some(7));
        assert_eq!(
            as_complete_bipartite(&gen("complete_bipartite:3,2")),
            Some((2, 3))
        );
        assert_eq!(
            as_complete_multipartite(&gen("complete_multipartite:1,2,3")),
            Some(vec![1, 2, 3])
        );
        assert_eq!(
            as_complete_multipartite(&gen("complete:4")),
            Some(vec![1, 1, 1, 1])
        );
        assert_eq!(as_complete_multipartite(&gen("cycle:5")), None);
        assert!(as_complete_bipartite(&gen("cycle:4")).is_some());
    }

    #[test]
    fn h_classes() {
        for n in 4..9 {
            assert!(is_h_prime(&gen(&format!("h_prime:{n}"))));
            assert!(!is_h_double_prime(&gen(&format!("h_prime:{n}"))));
        }
        for n in 5..9 {
            assert!(is_h_double_prime(&gen(&format!("h_double_prime:{n}"))));
            assert!(!is_h_prime(&gen(&format!("h_double_prime:{n}"))));
        }
        assert!(is_h_prime(&gen("z2")));
        assert!(!is_h_prime(&gen("cycle:4")));
    }

    #[test]
    fn hamiltonian() {
        let c = hamiltonian_cycle(&gen("petersen"));
        assert!(c.is_none());
        let c = hamiltonian_cycle(&gen("wheel:5")).unwrap();
        assert_eq!(c.len(), 6);
    }
}
