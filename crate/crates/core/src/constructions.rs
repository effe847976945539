//! Explicit colourings: the general upper-bound constructions, closed-form
//! colourings of cycles, wheels and `G_{k,t}`, and a few frozen colourings of
//! small named graphs.
//!
//! Every function returns a plain [`EdgeColouring`]; none of them asserts a
//! property it has not been built to guarantee. Run [`verify`](crate::verify)
//! on the output to check.

use crate::colouring::{is_proper, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec, Graph};
use crate::solver::{self, SearchConfig};
use std::collections::VecDeque;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Construction(msg.into()))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// BFS tree edges in discovery order, starting from every vertex of
/// `sources` at once. Neighbours are scanned by increasing id.
fn bfs_tree(g: &Graph, sources: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::new();
    for &s in sources {
        seen[s] = true;
        queue.push_back(s);
    }
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.incident(v) {
            if !seen[w] {
                seen[w] = true;
                tree.push(e);
                queue.push_back(w);
            }
        }
    }
    tree
}

/// Proper, rainbow-connected colouring with at most `χ′ + (n − 1 − Δ)`
/// colours, starting from an optimal proper colouring found by the solver.
///
/// Fails if the χ′ search runs out of budget; use [`spanning_star_from`]
/// with any proper colouring to avoid the search.
pub fn spanning_star_colouring(g: &Graph, cfg: &SearchConfig) -> Result<EdgeColouring> {
    require_connected(g)?;
    if g.size() == 0 {
        return EdgeColouring::new(Vec::new(), 0);
    }
    let chi = solver::chromatic_index(g, cfg)?;
    if !chi.exact {
        return fail("chromatic index search ran out of budget");
    }
    spanning_star_from(g, &chi.certificate)
}

/// The star construction on top of a given proper colouring `base` with
/// palette `K`: the star at a maximum-degree vertex `w` is relabelled to use
/// colours `1..=Δ`, the BFS tree from `w` is completed, and each non-star tree
/// edge gets a fresh colour. Palette: `K + (n − 1 − Δ)`.
pub fn spanning_star_from(g: &Graph, base: &EdgeColouring) -> Result<EdgeColouring> {
    require_connected(g)?;
    if !is_proper(g, base)?.proper {
        return fail("base colouring is not proper");
    }
    if g.size() == 0 {
        return Ok(base.clone());
    }
    let delta = g.max_degree();
    let w = (0..g.order()).find(|&v| g.degree(v) == delta).unwrap();
    let k = base.palette();
    let mut perm = vec![0u32; k as usize + 1];
    for (i, &(_, e)) in g.incident(w).iter().enumerate() {
        perm[base.colour(e) as usize] = i as u32 + 1;
    }
    let mut next = delta as u32;
    for c in 1..=k as usize {
        if perm[c] == 0 {
            next += 1;
            perm[c] = next;
        }
    }
    let mut colours: Vec<u32> = base.colours().iter().map(|&c| perm[c as usize]).collect();
    let mut fresh = k;
    for e in bfs_tree(g, &[w]) {
        let (a, b) = g.edge(e);
        if a != w && b != w {
            fresh += 1;
            colours[e] = fresh;
        }
    }
    EdgeColouring::new(colours, fresh)
}

/// Rainbow colouring with `n − 1` colours: a BFS spanning tree from vertex 0
/// coloured injectively, every other edge colour 1.
pub fn spanning_tree_rc_colouring(g: &Graph) -> Result<EdgeColouring> {
    require_connected(g)?;
    let mut colours = vec![1u32; g.size()];
    for (i, e) in bfs_tree(g, &[0]).into_iter().enumerate() {
        colours[e] = i as u32 + 1;
    }
    EdgeColouring::new(colours, g.order() as u32 - 1)
}

/// Rainbow colouring with `n + 1 − |clique|` colours: clique edges and all
/// leftover edges get colour 1, and the BFS forest growing out of the clique
/// gets colours `2, 3, …`.
pub fn clique_rc_colouring(g: &Graph, clique: &[usize]) -> Result<EdgeColouring> {
    require_connected(g)?;
    if clique.is_empty() {
        return fail("clique is empty");
    }
    for (i, &a) in clique.iter().enumerate() {
        if a >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: a,
                n: g.order(),
            });
        }
        for &b in &clique[i + 1..] {
            if a == b {
                return fail(format!("vertex {a} repeated in clique"));
            }
            if !g.has_edge(a, b) {
                return fail(format!(
                    "{a} and {b} are not adjacent, so the set is not a clique"
                ));
            }
        }
    }
    let mut colours = vec![1u32; g.size()];
    for (i, e) in bfs_tree(g, clique).into_iter().enumerate() {
        colours[e] = i as u32 + 2;
    }
    EdgeColouring::new(colours, (g.order() + 1 - clique.len()) as u32)
}

/// Colours the cycle `0-1-…-(n−1)-0` periodically with `⌈n/2⌉` colours:
/// the `i`-th edge around the cycle (`i = 1..=n`, edge `n` closing it) gets
/// `((i − 1) mod ⌈n/2⌉) + 1`.
pub fn cycle_colouring(n: usize) -> Result<(Graph, EdgeColouring)> {
    if n < 4 {
        return fail("cycle colouring needs n >= 4");
    }
    let g = FamilySpec::new(Family::Cycle, vec![n]).generate()?;
    let h = n.div_ceil(2) as u32;
    let mut colours = vec![0u32; n];
    for i in 1..=n {
        let e = g.edge_index(i - 1, i % n).unwrap();
        colours[e] = (i as u32 - 1) % h + 1;
    }
    Ok((g, EdgeColouring::new(colours, h)?))
}

/// `n`-colouring of the wheel with hub 0 and rim `1..=n`: spoke `w v_i` gets
/// `i`, rim edge `v_i v_{i+1}` gets `i + 2` for `i ≤ n − 2`, then
/// `v_{n−1} v_n` gets 1 and `v_n v_1` gets 2.
pub fn wheel_colouring(n: usize) -> Result<(Graph, EdgeColouring)> {
    if n < 4 {
        return fail("wheel colouring needs n >= 4");
    }
    let g = FamilySpec::new(Family::Wheel, vec![n]).generate()?;
    let triples: Vec<(usize, usize, u32)> = (1..=n)
        .map(|i| (0, i, i as u32))
        .chain((1..=n - 2).map(|i| (i, i + 1, i as u32 + 2)))
        .chain([(n - 1, n, 1), (n, 1, 2)])
        .collect();
    let c = EdgeColouring::from_triples(&g, &triples, n as u32)?;
    Ok((g, c))
}

/// The `(2t² + 1 + k)`-colouring of `G_{k,t}` (t ≥ 2): every spoke colour 1,
/// path edge `u_i u_{i+1}` colour `i + 1 − 2t²`, rim edge `v_i v_{i+1}` colour
/// `i` for `i ≤ t²` and `i − t²` for `t² < i < 2t²`, and the closing rim edge
/// `v_{2t²} v_1` colour `t²`. Rainbow connected but deliberately not proper.
pub fn gkt_colouring(k: usize, t: usize) -> Result<(Graph, EdgeColouring)> {
    if t < 2 {
        return fail("gkt colouring needs t >= 2 (use g11_colouring for k = t = 1)");
    }
    let spec = FamilySpec::new(Family::GKt, vec![k, t]);
    let g = spec.generate()?;
    let r = 2 * t * t;
    let tt = (t * t) as u32;
    // Path vertex u_i (i > r + 1) has id i - 1; u_{r+1} is the hub.
    let path_id = |i: usize| if i == r + 1 { 0 } else { i - 1 };
    let mut triples: Vec<(usize, usize, u32)> = (1..=r).map(|i| (0, i, 1)).collect();
    for i in r + 1..=2 * r + k {
        triples.push((path_id(i), path_id(i + 1), (i + 1 - r) as u32));
    }
    for i in 1..r {
        let c = if i as u32 <= tt {
            i as u32
        } else {
            i as u32 - tt
        };
        triples.push((i, i + 1, c));
    }
    triples.push((r, 1, tt));
    let c = EdgeColouring::from_triples(&g, &triples, (r + 1 + k) as u32)?;
    Ok((g, c))
}

/// Edge colouring of E(G) ∖ E(C) taken from the proper colouring `base`,
/// with the Hamiltonian cycle `C` of `G − N[w]` recoloured by fresh colours.
///
/// A cycle of length ≥ 4 gets the periodic `⌈|C|/2⌉`-colouring; a triangle
/// needs three fresh colours to stay proper. The result is proper; rainbow
/// connectivity is not guaranteed and must be checked.
pub fn hamiltonian_complement_colouring(
    g: &Graph,
    w: usize,
    cycle: &[usize],
    base: &EdgeColouring,
) -> Result<EdgeColouring> {
    require_connected(g)?;
    let n = g.order();
    if w >= n {
        return Err(Error::VertexOutOfRange { vertex: w, n });
    }
    if g.degree(w) != g.max_degree() {
        return fail(format!(
            "d(w) = {} is not the maximum degree {}",
            g.degree(w),
            g.max_degree()
        ));
    }
    if g.degree(w) + 2 > n {
        return fail("maximum degree must be at most n - 2");
    }
    if !is_proper(g, base)?.proper {
        return fail("base colouring is not proper");
    }
    let mut outside = vec![true; n];
    outside[w] = false;
    for v in g.neighbours(w) {
        outside[v] = false;
    }
    let expected = outside.iter().filter(|&&o| o).count();
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !outside[v] {
            return fail(format!("cycle vertex {v} lies in N[w]"));
        }
        if seen[v] {
            return fail(format!("cycle visits {v} twice"));
        }
        seen[v] = true;
    }
    if cycle.len() != expected {
        return fail(format!(
            "cycle has {} vertices but G - N[w] has {expected}",
            cycle.len()
        ));
    }
    if cycle.len() < 3 {
        return fail("G - N[w] has fewer than 3 vertices, so it has no Hamiltonian cycle");
    }
    let len = cycle.len();
    let mut cycle_edges = Vec::with_capacity(len);
    for i in 0..len {
        let (a, b) = (cycle[i], cycle[(i + 1) % len]);
        match g.edge_index(a, b) {
            Some(e) => cycle_edges.push(e),
            None => {
                return fail(format!(
                    "consecutive cycle vertices {a} and {b} are not adjacent"
                ))
            }
        }
    }
    let period = if len == 3 { 3 } else { len.div_ceil(2) } as u32;
    let k = base.palette();
    let mut colours = base.colours().to_vec();
    for (i, &e) in cycle_edges.iter().enumerate() {
        colours[e] = k + (i as u32 % period) + 1;
    }
    EdgeColouring::new(colours, k + period)
}

/// The six-vertex graph `G_{1,1}` with an optimal proper rainbow colouring
/// `v1v2 = 2, v1u3 = 1, v2u3 = 3, u3u4 = 2, u4u5 = 4, u5u6 = 5`.
pub fn g11_colouring() -> (Graph, EdgeColouring) {
    let g = FamilySpec::new(Family::G11, vec![])
        .generate()
        .expect("g_11");
    let triples = [
        (0, 1, 2),
        (0, 2, 1),
        (1, 2, 3),
        (2, 3, 2),
        (3, 4, 4),
        (4, 5, 5),
    ];
    let c = EdgeColouring::from_triples(&g, &triples, 5).expect("g_11 colouring");
    (g, c)
}

/// Which of the three frozen colourings of `F₈` to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F8Colouring {
    /// Proper 3-colouring that is not rainbow connected.
    Proper3,
    /// `u2u3` and `w2w3` moved to a fourth colour: proper and rainbow connected.
    ProperRainbow4,
    /// Colours of `u1u2`/`u2u3` and `w1w2`/`w2w3` swapped: rainbow connected, not proper.
    Rainbow3,
}

pub fn f8_colouring(which: F8Colouring) -> (Graph, EdgeColouring) {
    use crate::graph::families::f8_id;
    let g = FamilySpec::new(Family::F8, vec![]).generate().expect("f8");
    let mut labelled = vec![
        ("u", "u1", 1),
        ("u", "u2", 2),
        ("u", "u3", 3),
        ("u1", "u2", 3),
        ("u2", "u3", 1),
        ("u1", "w1", 2),
        ("u3", "w3", 2),
        ("w", "w2", 2),
        ("w2", "w3", 3),
        ("w", "w1", 3),
        ("w1", "w2", 1),
        ("w", "w3", 1),
    ];
    let set = |l: &mut Vec<(&str, &str, u32)>, a: &str, b: &str, c: u32| {
        l.iter_mut().find(|x| x.0 == a && x.1 == b).unwrap().2 = c;
    };
    let k = match which {
        F8Colouring::Proper3 => 3,
        F8Colouring::ProperRainbow4 => {
            set(&mut labelled, "u2", "u3", 4);
            set(&mut labelled, "w2", "w3", 4);
            4
        }
        F8Colouring::Rainbow3 => {
            set(&mut labelled, "u1", "u2", 1);
            set(&mut labelled, "u2", "u3", 3);
            set(&mut labelled, "w1", "w2", 3);
            set(&mut labelled, "w2", "w3", 1);
            3
        }
    };
    let triples: Vec<_> = labelled
        .iter()
        .map(|&(a, b, c)| (f8_id(a), f8_id(b), c))
        .collect();
    let c = EdgeColouring::from_triples(&g, &triples, k).expect("f8 colouring");
    (g, c)
}

/// The colourings quoted for the three six-vertex graphs `G_{6.1}`,
/// `G_{6.2}`, `G_{6.3}` (labels `w=0, w1=1, w2=2, w3=3, u1=4, u2=5`).
/// `index` is 1, 2 or 3.
pub fn g6_colouring(index: usize) -> Result<(Graph, EdgeColouring)> {
    let (family, triples, k): (Family, Vec<(usize, usize, u32)>, u32) = match index {
        1 => (
            Family::G61,
            vec![
                (0, 2, 1),
                (1, 3, 1),
                (4, 5, 1),
                (0, 1, 2),
                (2, 3, 2),
                (0, 3, 3),
                (1, 4, 3),
                (2, 5, 3),
            ],
            3,
        ),
        2 => (
            Family::G62,
            vec![
                (0, 2, 1),
                (1, 3, 1),
                (4, 5, 1),
                (0, 1, 2),
                (2, 3, 2),
                (0, 3, 3),
                (1, 4, 3),
                (2, 4, 4),
            ],
            4,
        ),
        3 => (
            Family::G63,
            vec![
                (0, 1, 1),
                (2, 3, 1),
                (4, 5, 1),
                (0, 2, 2),
                (1, 5, 2),
                (0, 3, 3),
                (2, 5, 3),
                (1, 4, 3),
            ],
            3,
        ),
        _ => return fail("G6 index must be 1, 2 or 3"),
    };
    let g = FamilySpec::new(family, vec![]).generate()?;
    let c = EdgeColouring::from_triples(&g, &triples, k)?;
    Ok((g, c))
}
