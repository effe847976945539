//! Seeded random graphs and colourings for property suites and sweeps.
//!
//! All generators take a caller-owned [`ChaCha8Rng`], so a fixed seed gives
//! the same stream on every platform.

use crate::colouring::EdgeColouring;
use crate::graph::{diameter, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph on `n` vertices: a uniformly random labelled
/// recursive tree, plus every other pair independently with probability `p`.
pub fn connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b])))
        .expect("simple by construction")
}

/// Connected graph of diameter exactly 2 on `n ≥ 3` vertices (rejection sampling).
pub fn diameter_two_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 3, "diameter 2 needs at least 3 vertices");
    loop {
        let p = rng.gen_range(0.3..0.9);
        let g = connected_graph(rng, n, p);
        if diameter(&g) == Some(2) {
            return g;
        }
    }
}

/// Connected graph with minimum degree at least `min_degree`: a random
/// connected graph topped up with random edges at deficient vertices.
pub fn min_degree_graph(rng: &mut ChaCha8Rng, n: usize, min_degree: usize) -> Graph {
    assert!(min_degree < n, "minimum degree must be below n");
    let p = rng.gen_range(0.1..0.6);
    let g = connected_graph(rng, n, p);
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for &v in &order {
        loop {
            let deg = adj[v].iter().filter(|&&x| x).count();
            if deg >= min_degree {
                break;
            }
            let free: Vec<usize> = (0..n).filter(|&w| w != v && !adj[v][w]).collect();
            let &w = free
                .choose(rng)
                .expect("a non-neighbour exists while deg < n - 1");
            adj[v][w] = true;
            adj[w][v] = true;
        }
    }
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a][b]);
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("simple by construction")
}

/// Random proper colouring: edges in random order, each taking a uniformly
/// random colour not yet used at either endpoint. The palette has
/// `2Δ − 1 + extra` colours, which always leaves a choice.
pub fn proper_colouring(rng: &mut ChaCha8Rng, g: &Graph, extra: u32) -> EdgeColouring {
    let k = (2 * g.max_degree()).saturating_sub(1) as u32 + extra;
    let k = k.max(1);
    let mut colours = vec![0u32; g.size()];
    let mut order: Vec<usize> = (0..g.size()).collect();
    order.shuffle(rng);
    for e in order {
        let (u, v) = g.edge(e);
        let blocked: Vec<u32> = g
            .incident(u)
            .iter()
            .chain(g.incident(v))
            .map(|&(_, f)| colours[f])
            .collect();
        let allowed: Vec<u32> = (1..=k).filter(|c| !blocked.contains(c)).collect();
        colours[e] = *allowed
            .choose(rng)
            .expect("palette of 2Δ-1 colours always has room");
    }
    EdgeColouring::new(colours, k).expect("colours within palette")
}

/// Uniform colouring with palette `k`; properness not enforced.
pub fn colouring(rng: &mut ChaCha8Rng, m: usize, k: u32) -> EdgeColouring {
    EdgeColouring::new((0..m).map(|_| rng.gen_range(1..=k)).collect(), k)
        .expect("colours within palette")
}

/// Random graph models available to sweeps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum RandomModel {
    /// Random connected graph with extra-edge probability `p`.
    Connected {
        p: f64,
    },
    DiameterTwo,
    MinDegree {
        min_degree: usize,
    },
}

impl std::str::FromStr for RandomModel {
    type Err = crate::error::Error;

    /// `connected:P`, `diameter_two` or `min_degree:D`.
    fn from_str(s: &str) -> crate::error::Result<Self> {
        let bad = || {
            crate::error::Error::Config(format!(
                "unknown random model `{s}` (expected connected:P, diameter_two or min_degree:D)"
            ))
        };
        let (tag, arg) = match s.split_once(':') {
            Some((t, a)) => (t.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        match (tag, arg) {
            ("connected", Some(p)) => {
                let p: f64 = p.parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad());
                }
                Ok(RandomModel::Connected { p })
            }
            ("diameter_two", None) => Ok(RandomModel::DiameterTwo),
            ("min_degree", Some(d)) => Ok(RandomModel::MinDegree {
                min_degree: d.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl RandomModel {
    /// Smallest order the model can produce.
    pub fn min_order(&self) -> usize {
        match *self {
            RandomModel::Connected { .. } => 1,
            RandomModel::DiameterTwo => 3,
            RandomModel::MinDegree { min_degree } => min_degree + 1,
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng, n: usize) -> Graph {
        match *self {
            RandomModel::Connected { p } => connected_graph(rng, n, p),
            RandomModel::DiameterTwo => diameter_two_graph(rng, n),
            RandomModel::MinDegree { min_degree } => min_degree_graph(rng, n, min_degree),
        }
    }
}
