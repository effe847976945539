//! Backtracking over edge colourings with first-occurrence colour symmetry
//! breaking. One engine serves all three parameters.

use super::{Determinism, EdgeOrder, SearchConfig};
use crate::colouring::RainbowDecider;
use crate::graph::Graph;
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Proper colourings only.
    Proper,
    /// Rainbow-connected colourings, properness ignored.
    Rainbow,
    /// Proper and rainbow connected.
    ProperRainbow,
}

impl Mode {
    fn proper(self) -> bool {
        matches!(self, Mode::Proper | Mode::ProperRainbow)
    }

    fn rainbow(self) -> bool {
        matches!(self, Mode::Rainbow | Mode::ProperRainbow)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Colours indexed by edge index.
    Found(Vec<u32>),
    Exhausted,
    Aborted,
}

/// Budget shared by every level and worker of one solve.
pub(crate) struct Budget {
    spent: AtomicU64,
    leaves: AtomicU64,
    node_limit: u64,
    started: Instant,
    time_limit: f64,
    aborted: AtomicBool,
}

impl Budget {
    pub fn new(cfg: &SearchConfig) -> Self {
        Budget {
            spent: AtomicU64::new(0),
            leaves: AtomicU64::new(0),
            node_limit: cfg.node_budget,
            started: Instant::now(),
            time_limit: cfg.time_budget_secs,
            aborted: AtomicBool::new(false),
        }
    }

    pub fn nodes(&self) -> u64 {
        self.spent.load(Ordering::Relaxed)
    }

    pub fn leaves(&self) -> u64 {
        self.leaves.load(Ordering::Relaxed)
    }

    pub fn elapsed_secs(&self) -> f64 {
        self.started.elapsed().as_secs_f64()
    }

    /// Adds `batch` nodes; false once a limit is hit.
    fn charge(&self, batch: u64) -> bool {
        let total = self.spent.fetch_add(batch, Ordering::Relaxed) + batch;
        if total > self.node_limit || self.elapsed_secs() > self.time_limit {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }
}

/// Positions of edges in assignment order.
pub(crate) fn edge_order(g: &Graph, order: EdgeOrder) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..g.size()).collect();
    if order == EdgeOrder::DegreeSum {
        idx.sort_by_key(|&e| {
            let (u, v) = g.edge(e);
            (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
        });
    }
    idx
}

const CHARGE_EVERY: u64 = 1024;

#[derive(Clone)]
struct Engine<'a> {
    g: &'a Graph,
    order: &'a [usize],
    k: u32,
    mode: Mode,
    symmetry: bool,
    prune: bool,
    colours: Vec<u32>,
    used_at: Vec<u64>,
    decider: RainbowDecider,
    relaxed: Vec<u32>,
    hint: usize,
    pending: u64,
    batch: u64,
    leaves: u64,
    budget: &'a Budget,
    /// Set when any worker finds a colouring (parallel mode only).
    found: Option<&'a AtomicBool>,
}

impl<'a> Engine<'a> {
    fn new(
        g: &'a Graph,
        order: &'a [usize],
        k: u32,
        mode: Mode,
        cfg: &SearchConfig,
        budget: &'a Budget,
    ) -> Self {
        Engine {
            g,
            order,
            k,
            mode,
            symmetry: cfg.symmetry_breaking,
            prune: cfg.rainbow_pruning && mode.rainbow(),
            colours: vec![0; g.size()],
            used_at: vec![0; g.order()],
            decider: RainbowDecider::new(g),
            relaxed: vec![0; g.size()],
            hint: 0,
            pending: 0,
            batch: CHARGE_EVERY.min(cfg.node_budget),
            leaves: 0,
            budget,
            found: None,
        }
    }

    fn assign(&mut self, e: usize, c: u32) {
        let (u, v) = self.g.edge(e);
        self.colours[e] = c;
        self.used_at[u] |= 1 << (c - 1);
        self.used_at[v] |= 1 << (c - 1);
    }

    fn unassign(&mut self, e: usize) {
        let (u, v) = self.g.edge(e);
        let c = self.colours[e];
        self.colours[e] = 0;
        // Under properness each colour appears once per vertex, so clearing is exact.
        if self.mode.proper() {
            self.used_at[u] &= !(1 << (c - 1));
            self.used_at[v] &= !(1 << (c - 1));
        }
    }

    fn flush(&mut self) -> bool {
        let ok = self.budget.charge(self.pending);
        self.budget.leaves.fetch_add(self.leaves, Ordering::Relaxed);
        self.pending = 0;
        self.leaves = 0;
        ok && !self.found.is_some_and(|f| f.load(Ordering::Relaxed))
    }

    fn candidates(&self, pos: usize, max_used: u32) -> impl Iterator<Item = u32> + '_ {
        let top = if self.symmetry {
            self.k.min(max_used + 1)
        } else {
            self.k
        };
        let e = self.order[pos];
        let (u, v) = self.g.edge(e);
        let blocked = if self.mode.proper() {
            self.used_at[u] | self.used_at[v]
        } else {
            0
        };
        (1..=top).filter(move |&c| blocked >> (c - 1) & 1 == 0)
    }

    fn leaf_ok(&mut self) -> bool {
        self.leaves += 1;
        !self.mode.rainbow()
            || self
                .decider
                .is_rainbow_connected_hinted(&self.colours, self.k, &mut self.hint)
    }

    /// Rainbow check on the relaxation that gives every uncoloured edge its
    /// own fresh colour. Any completion's rainbow paths survive in it.
    fn relaxation_ok(&mut self, pos: usize) -> bool {
        let free = (self.order.len() - pos) as u32;
        let k = self.k + free;
        // Only worth it while the decider can use its dense state table.
        let vertex_bits = usize::BITS - self.g.order().max(1).leading_zeros();
        if free == 0 || k + vertex_bits > 24 {
            return true;
        }
        let mut next = self.k;
        for (e, &c) in self.colours.iter().enumerate() {
            self.relaxed[e] = if c == 0 {
                next += 1;
                next
            } else {
                c
            };
        }
        self.decider
            .is_rainbow_connected_hinted(&self.relaxed, k, &mut self.hint)
    }

    fn dfs(&mut self, pos: usize, max_used: u32) -> Outcome {
        if pos == self.order.len() {
            return if self.leaf_ok() {
                Outcome::Found(self.colours.clone())
            } else {
                Outcome::Exhausted
            };
        }
        let e = self.order[pos];
        let cands: Vec<u32> = self.candidates(pos, max_used).collect();
        for c in cands {
            self.pending += 1;
            if self.pending >= self.batch && !self.flush() {
                return Outcome::Aborted;
            }
            self.assign(e, c);
            if self.prune && !self.relaxation_ok(pos + 1) {
                self.unassign(e);
                continue;
            }
            match self.dfs(pos + 1, max_used.max(c)) {
                Outcome::Exhausted => self.unassign(e),
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    /// Partial assignments of the first `depth` positions, in search order.
    fn prefixes(
        &mut self,
        pos: usize,
        depth: usize,
        max_used: u32,
        out: &mut Vec<(Vec<u32>, u32)>,
    ) {
        if pos == depth {
            out.push((
                self.order[..depth]
                    .iter()
                    .map(|&e| self.colours[e])
                    .collect(),
                max_used,
            ));
            return;
        }
        let e = self.order[pos];
        let cands: Vec<u32> = self.candidates(pos, max_used).collect();
        for c in cands {
            self.assign(e, c);
            self.prefixes(pos + 1, depth, max_used.max(c), out);
            self.unassign(e);
        }
    }
}

/// Decides whether a `k`-colouring of the requested kind exists.
pub(crate) fn run(g: &Graph, k: u32, mode: Mode, cfg: &SearchConfig, budget: &Budget) -> Outcome {
    assert!((1..=64).contains(&k), "palette must be in 1..=64");
    if budget.aborted.load(Ordering::Relaxed) {
        return Outcome::Aborted;
    }
    if mode.proper() && g.max_degree() > k as usize {
        return Outcome::Exhausted;
    }
    let order = edge_order(g, cfg.edge_order);
    let mut engine = Engine::new(g, &order, k, mode, cfg, budget);
    let outcome = match cfg.determinism {
        Determinism::SequentialCanonical => engine.dfs(0, 0),
        Determinism::ParallelValueOnly => run_parallel(&mut engine),
    };
    engine.flush();
    outcome
}

fn run_parallel(engine: &mut Engine<'_>) -> Outcome {
    let m = engine.order.len();
    let target = 8 * rayon::current_num_threads().max(1);
    let mut depth = 0;
    let mut prefixes = vec![(Vec::new(), 0)];
    while depth < m && prefixes.len() < target {
        depth += 1;
        prefixes.clear();
        engine.prefixes(0, depth, 0, &mut prefixes);
    }
    let found = AtomicBool::new(false);
    let base = engine.clone();
    let results: Vec<Outcome> = prefixes
        .par_iter()
        .map(|(prefix, max_used)| {
            if found.load(Ordering::Relaxed) {
                return Outcome::Aborted;
            }
            let mut w = base.clone();
            w.found = Some(&found);
            for (pos, &c) in prefix.iter().enumerate() {
                w.assign(w.order[pos], c);
            }
            let out = w.dfs(depth, *max_used);
            w.found = None;
            w.flush();
            if matches!(out, Outcome::Found(_)) {
                found.store(true, Ordering::Relaxed);
            }
            out
        })
        .collect();
    let mut aborted = false;
    for r in results {
        match r {
            Outcome::Found(c) => return Outcome::Found(c),
            Outcome::Aborted => aborted = true,
            Outcome::Exhausted => {}
        }
    }
    if aborted {
        Outcome::Aborted
    } else {
        Outcome::Exhausted
    }
}
