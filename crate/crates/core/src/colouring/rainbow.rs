//! Rainbow connectivity by search over `(vertex, used-colour set)` states.
//!
//! A rainbow walk can always be shortened to a rainbow path on the same
//! colours, so reachability in the state space decides the question exactly.
//! Every minimum-length rainbow walk is itself a path, which is why the
//! layered search below returns genuine paths.

use super::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

pub const DEFAULT_COLOUR_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RainbowOptions {
    /// Largest palette the checker accepts; the state space is `n · 2^k`.
    pub colour_cap: usize,
    /// Collect a path for every pair instead of stopping at the first failure.
    pub full_witness: bool,
}

impl Default for RainbowOptions {
    fn default() -> Self {
        RainbowOptions {
            colour_cap: DEFAULT_COLOUR_CAP,
            full_witness: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    /// Vertex sequence from `u` to `v`, or `None` if no rainbow path exists.
    pub path: Option<Vec<usize>>,
}

/// One entry per unordered pair `u < v`, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowWitness {
    pub pairs: Vec<PairWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowCheck {
    pub connected: bool,
    /// Smallest pair (in source-then-target order) with no rainbow path.
    pub first_unwitnessed: Option<(usize, usize)>,
    /// Present in full-witness mode.
    pub witness: Option<RainbowWitness>,
}

fn colour_bits(g: &Graph, c: &EdgeColouring, cap: usize) -> Result<Vec<u64>> {
    c.check_size(g)?;
    let k = c.palette() as usize;
    if k > cap || k > 64 {
        return Err(Error::ColourCapExceeded {
            k,
            cap: cap.min(64),
        });
    }
    Ok(c.colours().iter().map(|&col| 1u64 << (col - 1)).collect())
}

/// Lexicographically least minimum-length rainbow path from `source` to
/// every vertex flagged in `need`.
fn paths_from(g: &Graph, bits: &[u64], source: usize, need: &[bool]) -> Vec<Option<Vec<usize>>> {
    let n = g.order();
    let mut first_state: Vec<Option<usize>> = vec![None; n];
    // (vertex, colours used, predecessor state)
    let mut states: Vec<(usize, u64, usize)> = vec![(source, 0, usize::MAX)];
    let mut seen: HashSet<(usize, u64)> = HashSet::from([(source, 0)]);
    first_state[source] = Some(0);
    let mut remaining = (0..n).filter(|&t| need[t] && t != source).count();
    let mut layer = 0..1;
    while remaining > 0 && !layer.is_empty() {
        let start = states.len();
        // States of one layer are stored in lexicographic order of their best
        // walks, so the first discovery of a state is its best walk too.
        for i in layer {
            let (v, mask, _) = states[i];
            for &(w, e) in g.incident(v) {
                let b = bits[e];
                if mask & b != 0 || !seen.insert((w, mask | b)) {
                    continue;
                }
                states.push((w, mask | b, i));
                if first_state[w].is_none() {
                    first_state[w] = Some(states.len() - 1);
                    if need[w] {
                        remaining -= 1;
                    }
                }
            }
        }
        layer = start..states.len();
    }
    (0..n)
        .map(|t| {
            if !need[t] {
                return None;
            }
            let mut idx = first_state[t]?;
            let mut path = Vec::new();
            while idx != usize::MAX {
                path.push(states[idx].0);
                idx = states[idx].2;
            }
            path.reverse();
            Some(path)
        })
        .collect()
}

pub fn is_rainbow_connected(g: &Graph, c: &EdgeColouring) -> Result<RainbowCheck> {
    is_rainbow_connected_with(g, c, &RainbowOptions::default())
}

pub fn is_rainbow_connected_with(
    g: &Graph,
    c: &EdgeColouring,
    opts: &RainbowOptions,
) -> Result<RainbowCheck> {
    let bits = colour_bits(g, c, opts.colour_cap)?;
    let n = g.order();
    let mut first_unwitnessed = None;
    let mut pairs = Vec::new();
    for s in 0..n {
        let need: Vec<bool> = (0..n).map(|t| t > s).collect();
        let paths = paths_from(g, &bits, s, &need);
        for (t, path) in paths.into_iter().enumerate().skip(s + 1) {
            if path.is_none() && first_unwitnessed.is_none() {
                first_unwitnessed = Some((s, t));
            }
            if opts.full_witness {
                pairs.push(PairWitness { u: s, v: t, path });
            }
        }
        if first_unwitnessed.is_some() && !opts.full_witness {
            break;
        }
    }
    Ok(RainbowCheck {
        connected: first_unwitnessed.is_none(),
        first_unwitnessed,
        witness: opts.full_witness.then_some(RainbowWitness { pairs }),
    })
}

/// Lexicographically least among the shortest rainbow `u`–`v` paths.
pub fn rainbow_path(
    g: &Graph,
    c: &EdgeColouring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>> {
    rainbow_path_with(g, c, u, v, DEFAULT_COLOUR_CAP)
}

pub fn rainbow_path_with(
    g: &Graph,
    c: &EdgeColouring,
    u: usize,
    v: usize,
    colour_cap: usize,
) -> Result<Option<Vec<usize>>> {
    let bits = colour_bits(g, c, colour_cap)?;
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.order(),
            });
        }
    }
    let mut need = vec![false; g.order()];
    need[v] = true;
    Ok(paths_from(g, &bits, u, &need).swap_remove(v))
}

/// Reusable yes/no rainbow-connectivity test for the inner loop of the
/// solvers. Colours are `1..=k` with `k <= 64`.
#[derive(Debug, Clone)]
pub struct RainbowDecider {
    n: usize,
    offsets: Vec<usize>,
    adjacency: Vec<(u32, u32)>,
    dense: Vec<u64>,
    touched: Vec<usize>,
    sparse: HashSet<(u32, u64)>,
    queue: Vec<(u32, u64)>,
    reached: Vec<bool>,
}

const DENSE_LIMIT_BITS: u32 = 24;

impl RainbowDecider {
    pub fn new(g: &Graph) -> Self {
        let mut offsets = vec![0];
        let mut adjacency = Vec::with_capacity(2 * g.size());
        for v in 0..g.order() {
            adjacency.extend(g.incident(v).iter().map(|&(w, e)| (w as u32, e as u32)));
            offsets.push(adjacency.len());
        }
        RainbowDecider {
            n: g.order(),
            offsets,
            adjacency,
            dense: Vec::new(),
            touched: Vec::new(),
            sparse: HashSet::new(),
            queue: Vec::new(),
            reached: vec![false; g.order()],
        }
    }

    pub fn is_rainbow_connected(&mut self, colours: &[u32], k: u32) -> bool {
        self.first_unwitnessed(colours, k).is_none()
    }

    /// Like [`is_rainbow_connected`](Self::is_rainbow_connected), but tries the
    /// source in `hint` first and stores the failing source there. Inside a
    /// search the same source tends to fail over and over.
    pub fn is_rainbow_connected_hinted(
        &mut self,
        colours: &[u32],
        k: u32,
        hint: &mut usize,
    ) -> bool {
        let dense = self.prepare(k);
        let first = (*hint).min(self.n.saturating_sub(2));
        let rest = (0..self.n.saturating_sub(1)).filter(|&s| s != first);
        for s in std::iter::once(first).chain(rest) {
            if self.n >= 2 && self.search(colours, k, s, dense).is_some() {
                *hint = s;
                return false;
            }
        }
        true
    }

    fn prepare(&mut self, k: u32) -> bool {
        assert!(k <= 64, "RainbowDecider supports at most 64 colours");
        let vertex_bits = usize::BITS - self.n.max(1).leading_zeros();
        let dense = k + vertex_bits <= DENSE_LIMIT_BITS;
        if dense {
            let words = (self.n << k).div_ceil(64);
            if self.dense.len() < words {
                self.dense.resize(words, 0);
            }
        }
        dense
    }

    /// First pair `(s, t)`, `s < t`, with no rainbow path.
    pub fn first_unwitnessed(&mut self, colours: &[u32], k: u32) -> Option<(usize, usize)> {
        let dense = self.prepare(k);
        for s in 0..self.n.saturating_sub(1) {
            if let Some(t) = self.search(colours, k, s, dense) {
                return Some((s, t));
            }
        }
        None
    }

    /// Returns the smallest `t > s` left unreached from `s`.
    fn search(&mut self, colours: &[u32], k: u32, s: usize, dense: bool) -> Option<usize> {
        self.reached.iter_mut().for_each(|r| *r = false);
        self.reached[s] = true;
        let mut missing = self.n - s - 1;
        self.queue.clear();
        self.queue.push((s as u32, 0));
        self.mark(s as u32, 0, k, dense);
        let mut head = 0;
        while head < self.queue.len() && missing > 0 {
            let (v, mask) = self.queue[head];
            head += 1;
            for i in self.offsets[v as usize]..self.offsets[v as usize + 1] {
                let (w, e) = self.adjacency[i];
                let b = 1u64 << (colours[e as usize] - 1);
                if mask & b != 0 || !self.mark(w, mask | b, k, dense) {
                    continue;
                }
                self.queue.push((w, mask | b));
                if !self.reached[w as usize] {
                    self.reached[w as usize] = true;
                    if w as usize > s {
                        missing -= 1;
                    }
                }
            }
        }
        let result = if missing == 0 {
            None
        } else {
            (s + 1..self.n).find(|&t| !self.reached[t])
        };
        if dense {
            for &idx in &self.touched {
                self.dense[idx / 64] = 0;
            }
            self.touched.clear();
        } else {
            self.sparse.clear();
        }
        result
    }

    /// Marks a state visited; false if it already was.
    fn mark(&mut self, v: u32, mask: u64, k: u32, dense: bool) -> bool {
        if dense {
            let idx = ((v as usize) << k) | mask as usize;
            let (word, bit) = (idx / 64, idx % 64);
            if self.dense[word] >> bit & 1 == 1 {
                return false;
            }
            self.dense[word] |= 1 << bit;
            self.touched.push(idx);
            true
        } else {
            self.sparse.insert((v, mask))
        }
    }
}
