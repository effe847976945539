use super::Graph;

/// Isomorphism test by backtracking over degree-compatible vertex maps.
/// Meant for the small graphs the crate works with.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    let order: Vec<usize> = {
        // Map high-degree vertices first; BFS-ish order keeps adjacency checks early.
        let mut o: Vec<usize> = (0..g.order()).collect();
        o.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        o
    };
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    extend(g, h, &order, 0, &mut map, &mut used)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for image in 0..h.order() {
        if used[image] || h.degree(image) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], image));
        if !consistent {
            continue;
        }
        map[v] = image;
        used[image] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[image] = false;
        map[v] = usize::MAX;
    }
    false
}
