//! Exact χ′, rc and prc by pruned backtracking.
//!
//! Each solver brackets the answer between cheap lower bounds and a
//! constructive upper bound, then decides `k = lower, lower + 1, …` until a
//! colouring is found. Running out of budget yields a bracket with
//! `exact = false`; it never yields a wrong exact value.

mod misra_gries;
mod oracle;
mod search;

pub use misra_gries::misra_gries;
pub use oracle::{brute_force_oracle, ORACLE_CAP};

use crate::colouring::{EdgeColouring, DEFAULT_COLOUR_CAP};
use crate::constructions;
use crate::error::{Error, Result};
use crate::graph::{bridges, diameter, maximum_clique, Graph};
use search::{Budget, Mode, Outcome};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    ChiPrime,
    Rc,
    Prc,
}

impl Parameter {
    pub fn tag(self) -> &'static str {
        match self {
            Parameter::ChiPrime => "chi_prime",
            Parameter::Rc => "rc",
            Parameter::Prc => "prc",
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi_prime" | "chi" => Ok(Parameter::ChiPrime),
            "rc" => Ok(Parameter::Rc),
            "prc" => Ok(Parameter::Prc),
            other => Err(Error::Config(format!(
                "unknown parameter `{other}` (expected chi_prime, rc or prc)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrder {
    /// Descending endpoint-degree sum, ties by edge index.
    #[default]
    DegreeSum,
    /// Plain edge-index order.
    Canonical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Determinism {
    /// Single-threaded; value and certificate reproducible.
    #[default]
    SequentialCanonical,
    /// Top-level branches fanned out to the rayon pool; value reproducible,
    /// certificate may differ between runs.
    ParallelValueOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget_secs: f64,
    /// Largest palette the rainbow searches accept.
    pub colour_cap: usize,
    pub symmetry_breaking: bool,
    pub edge_order: EdgeOrder,
    pub determinism: Determinism,
    /// Prune partial colourings whose fresh-colour relaxation is not rainbow connected.
    pub rainbow_pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 100_000_000,
            time_budget_secs: 60.0,
            colour_cap: DEFAULT_COLOUR_CAP,
            symmetry_breaking: true,
            edge_order: EdgeOrder::DegreeSum,
            determinism: Determinism::SequentialCanonical,
            rainbow_pruning: false,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.node_budget == 0 {
            return Err(Error::Config("node budget must be positive".into()));
        }
        if !(self.time_budget_secs > 0.0) {
            return Err(Error::Config("time budget must be positive".into()));
        }
        if self.colour_cap == 0 || self.colour_cap > 64 {
            return Err(Error::Config("colour cap must be in 1..=64".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelStatus {
    Feasible,
    Infeasible,
    Aborted,
}

/// Result of deciding one palette size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub k: usize,
    pub status: LevelStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub elapsed_secs: f64,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub levels: Vec<Level>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveResult {
    pub parameter: Parameter,
    /// Exact value, or the certified upper end of the bracket when `exact` is false.
    pub value: usize,
    pub certificate: EdgeColouring,
    pub exact: bool,
    pub stats: SearchStats,
}

impl SolveResult {
    /// `[lower, upper]`; a single point when exact.
    pub fn bracket(&self) -> (usize, usize) {
        if self.exact {
            (self.value, self.value)
        } else {
            (self.stats.lower_bound, self.value)
        }
    }
}

/// Outcome of a single decision problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Feasible(EdgeColouring),
    Infeasible,
    /// Budget ran out first.
    Unknown,
}

impl Decision {
    /// `Some(answer)`, or `None` if undecided.
    pub fn answer(&self) -> Option<bool> {
        match self {
            Decision::Feasible(_) => Some(true),
            Decision::Infeasible => Some(false),
            Decision::Unknown => None,
        }
    }

    pub fn certificate(&self) -> Option<&EdgeColouring> {
        match self {
            Decision::Feasible(c) => Some(c),
            _ => None,
        }
    }
}

fn mode_of(p: Parameter) -> Mode {
    match p {
        Parameter::ChiPrime => Mode::Proper,
        Parameter::Rc => Mode::Rainbow,
        Parameter::Prc => Mode::ProperRainbow,
    }
}

struct Solve<'a> {
    g: &'a Graph,
    cfg: &'a SearchConfig,
    budget: Budget,
    levels: Vec<Level>,
}

impl<'a> Solve<'a> {
    fn new(g: &'a Graph, cfg: &'a SearchConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Solve {
            g,
            cfg,
            budget: Budget::new(cfg),
            levels: Vec::new(),
        })
    }

    fn check_cap(&self, mode: Mode, k: usize) -> Result<()> {
        let cap = if mode == Mode::Proper {
            64
        } else {
            self.cfg.colour_cap
        };
        if k > cap {
            return Err(Error::ColourCapExceeded { k, cap });
        }
        Ok(())
    }

    fn decide(&mut self, mode: Mode, k: usize) -> Result<Decision> {
        self.check_cap(mode, k)?;
        let decision = if self.g.size() == 0 {
            Decision::Feasible(EdgeColouring::new(Vec::new(), k as u32)?)
        } else if k == 0 {
            Decision::Infeasible
        } else {
            match search::run(self.g, k as u32, mode, self.cfg, &self.budget) {
                Outcome::Found(colours) => {
                    Decision::Feasible(EdgeColouring::new(colours, k as u32)?)
                }
                Outcome::Exhausted => Decision::Infeasible,
                Outcome::Aborted => Decision::Unknown,
            }
        };
        let status = match decision {
            Decision::Feasible(_) => LevelStatus::Feasible,
            Decision::Infeasible => LevelStatus::Infeasible,
            Decision::Unknown => LevelStatus::Aborted,
        };
        self.levels.push(Level { k, status });
        Ok(decision)
    }

    /// Scans `lower..upper`; the first feasible level wins, otherwise
    /// `upper` with `fallback`.
    fn minimise(
        mut self,
        parameter: Parameter,
        lower: usize,
        upper: usize,
        fallback: EdgeColouring,
    ) -> Result<SolveResult> {
        let mode = mode_of(parameter);
        let mut found = None;
        let mut exact = true;
        for k in lower..upper {
            match self.decide(mode, k)? {
                Decision::Feasible(c) => {
                    found = Some((k, c));
                    break;
                }
                Decision::Infeasible => {}
                Decision::Unknown => {
                    exact = false;
                    break;
                }
            }
        }
        let proven_lower = self
            .levels
            .iter()
            .filter(|l| l.status == LevelStatus::Infeasible)
            .map(|l| l.k + 1)
            .max()
            .unwrap_or(0)
            .max(lower);
        let (value, certificate) = found.unwrap_or((upper, fallback));
        Ok(SolveResult {
            parameter,
            value,
            certificate,
            exact,
            stats: SearchStats {
                nodes: self.budget.nodes(),
                leaves: self.budget.leaves(),
                elapsed_secs: self.budget.elapsed_secs(),
                lower_bound: proven_lower.min(value),
                upper_bound: upper,
                levels: self.levels,
            },
        })
    }
}

/// χ′(G) ∈ {Δ, Δ+1}: an exhaustive proper Δ-colouring search, with
/// Misra–Gries supplying the Δ+1 certificate.
pub fn chromatic_index(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    if g.size() == 0 {
        return Err(Error::EmptyGraph);
    }
    let delta = g.max_degree();
    Solve::new(g, cfg)?.minimise(Parameter::ChiPrime, delta, delta + 1, misra_gries(g))
}

/// Lower bound shared by rc and prc: the diameter, and the number of bridges
/// (any two bridges lie on a common forced path, so all need distinct colours).
fn rainbow_lower_bound(g: &Graph) -> Result<usize> {
    let diam = diameter(g).ok_or(Error::Disconnected)?;
    Ok(diam.max(bridges(g).len()))
}

fn connected_nonempty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Cheapest known rainbow colouring: a maximum clique in one colour plus a
/// rainbow connector, `n + 1 - ω` colours.
fn rc_upper(g: &Graph) -> Result<EdgeColouring> {
    if g.order() <= 64 {
        constructions::clique_rc_colouring(g, &maximum_clique(g))
    } else {
        constructions::spanning_tree_rc_colouring(g)
    }
}

pub fn rc(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    connected_nonempty(g)?;
    let lower = rainbow_lower_bound(g)?;
    let upper = rc_upper(g)?;
    let top = upper.palette() as usize;
    Solve::new(g, cfg)?.minimise(Parameter::Rc, lower, top, upper)
}

pub fn prc(g: &Graph, cfg: &SearchConfig) -> Result<SolveResult> {
    connected_nonempty(g)?;
    if g.size() == 0 {
        return Solve::new(g, cfg)?.minimise(
            Parameter::Prc,
            0,
            0,
            EdgeColouring::new(Vec::new(), 0)?,
        );
    }
    let chi = chromatic_index(g, cfg)?;
    let chi_lower = if chi.exact {
        chi.value
    } else {
        chi.stats.lower_bound
    };
    let lower = chi_lower.max(rainbow_lower_bound(g)?);
    let star = constructions::spanning_star_from(g, &chi.certificate)?;
    let upper = if (star.palette() as usize) <= g.size() {
        star
    } else {
        EdgeColouring::all_distinct(g.size())
    };
    let top = upper.palette() as usize;
    let mut res = Solve::new(g, cfg)?.minimise(Parameter::Prc, lower.min(top), top, upper)?;
    res.stats.nodes += chi.stats.nodes;
    res.stats.leaves += chi.stats.leaves;
    Ok(res)
}

pub fn solve(g: &Graph, parameter: Parameter, cfg: &SearchConfig) -> Result<SolveResult> {
    match parameter {
        Parameter::ChiPrime => chromatic_index(g, cfg),
        Parameter::Rc => rc(g, cfg),
        Parameter::Prc => prc(g, cfg),
    }
}

/// Is there a `k`-colouring of the kind `parameter` asks for?
pub fn decide_at_k(
    g: &Graph,
    parameter: Parameter,
    k: usize,
    cfg: &SearchConfig,
) -> Result<Decision> {
    Solve::new(g, cfg)?.decide(mode_of(parameter), k)
}

/// Is there a proper rainbow-connected `k`-colouring?
pub fn decide_prc_at_k(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Decision> {
    decide_at_k(g, Parameter::Prc, k, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify;
    use crate::graph::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn value(s: &str, p: Parameter) -> usize {
        let g = gen(s);
        let r = solve(&g, p, &SearchConfig::default()).unwrap();
        assert!(r.exact, "{s} {p}");
        r.value
    }

    #[test]
    fn small_values() {
        assert_eq!(value("complete:4", Parameter::ChiPrime), 3);
        assert_eq!(value("complete:5", Parameter::ChiPrime), 5);
        assert_eq!(value("cycle:7", Parameter::Prc), 4);
        assert_eq!(value("path:5", Parameter::Rc), 4);
        assert_eq!(value("complete:6", Parameter::Rc), 1);
    }

    #[test]
    fn certificates_verify() {
        let g = gen("wheel:5");
        let r = prc(&g, &SearchConfig::default()).unwrap();
        assert_eq!(r.value, 5);
        let rep = verify(&g, &r.certificate).unwrap();
        assert!(rep.is_prc_certificate);
        assert_eq!(r.certificate.palette(), 5);
    }

    #[test]
    fn tiny_budget_brackets() {
        let g = gen("cycle:9");
        let cfg = SearchConfig {
            node_budget: 10,
            ..Default::default()
        };
        let r = prc(&g, &cfg).unwrap();
        assert!(!r.exact);
        let (lo, hi) = r.bracket();
        assert!(lo <= hi);
        assert!(verify(&g, &r.certificate).unwrap().is_prc_certificate);
    }

    #[test]
    fn parameter_parsing() {
        assert_eq!(
            "chi_prime".parse::<Parameter>().unwrap(),
            Parameter::ChiPrime
        );
        assert!("foo".parse::<Parameter>().is_err());
    }

    #[test]
    fn zero_budget_rejected() {
        let cfg = SearchConfig {
            node_budget: 0,
            ..Default::default()
        };
        assert!(rc(&gen("path:3"), &cfg).is_err());
    }
}
