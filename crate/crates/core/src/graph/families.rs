//! Named graph families with frozen vertex labellings.
//!
//! | tag | parameters | labelling |
//! |-----|------------|-----------|
//! | `complete:n` | n ≥ 1 | `0..n` |
//! | `path:n` | n ≥ 1 (order) | path `0-1-…-(n-1)` |
//! | `cycle:n` | n ≥ 3 | cycle `0-1-…-(n-1)-0` |
//! | `wheel:n` | n ≥ 4 | hub `w = 0`, rim `v_i = i` for `i in 1..=n` |
//! | `complete_bipartite:s,t` | s, t ≥ 1 | part A `0..s`, part B `s..s+t` |
//! | `complete_multipartite:p1,…,pr` | r ≥ 1, p_i ≥ 1 | parts consecutive, in order |
//! | `clique_product:p1,…,pr` | r ≥ 1, p_i ≥ 2 | row-major tuples, last coordinate fastest |
//! | `g_kt:k,t` | k ≥ t ≥ 1; t = 1 only with k = 1 | see below |
//! | `g_11` | none | `v1=0, v2=1, u3=2, u4=3, u5=4, u6=5` |
//! | `z2` | none | triangle `u1=0, u2=1, u3=2`; `u4=3` on `u1`, `u5=4` on `u4` |
//! | `f8` | none | `u=0, u1=1, u2=2, u3=3, w1=4, w2=5, w3=6, w=7` |
//! | `f_n:n` | n even, n ≥ 6 | `v_i = i-1` |
//! | `g6_1`, `g6_2`, `g6_3` | none | `w=0, w1=1, w2=2, w3=3, u1=4, u2=5` |
//! | `h_prime:n` | n ≥ 4 (order) | triangle `0,1,2`; pendant path `0-3-4-…-(n-1)` |
//! | `h_double_prime:n` | n ≥ 5 (order) | triangle `0,1,2`; leaves `3..n` on vertex 0 |
//! | `petersen` | none | outer cycle `0..5`, spokes `i-(i+5)`, inner pentagram |
//!
//! `g_kt:k,t` with t ≥ 2 is the wheel `W_{2t²}` (hub `v = 0`, rim
//! `v_i = i` for `i in 1..=2t²`) with a path of `2t²+k` further edges hung on
//! the hub; path vertex `u_i` (`2t²+2 ≤ i ≤ 4t²+1+k`) has id `i-1`, and the hub
//! doubles as `u_{2t²+1}`. `g_kt:1,1` is the six-vertex graph `g_11`.

use super::{cartesian_product, Graph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Wheel,
    CompleteBipartite,
    CompleteMultipartite,
    CliqueProduct,
    GKt,
    G11,
    Z2,
    F8,
    FN,
    G61,
    G62,
    G63,
    HPrime,
    HDoublePrime,
    Petersen,
}

impl Family {
    pub const ALL: [Family; 18] = [
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::CompleteBipartite,
        Family::CompleteMultipartite,
        Family::CliqueProduct,
        Family::GKt,
        Family::G11,
        Family::Z2,
        Family::F8,
        Family::FN,
        Family::G61,
        Family::G62,
        Family::G63,
        Family::HPrime,
        Family::HDoublePrime,
        Family::Petersen,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::CliqueProduct => "clique_product",
            Family::GKt => "g_kt",
            Family::G11 => "g_11",
            Family::Z2 => "z2",
            Family::F8 => "f8",
            Family::FN => "f_n",
            Family::G61 => "g6_1",
            Family::G62 => "g6_2",
            Family::G63 => "g6_3",
            Family::HPrime => "h_prime",
            Family::HDoublePrime => "h_double_prime",
            Family::Petersen => "petersen",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }
}

/// A family tag plus its integer parameters, e.g. `wheel:7` or `g_kt:3,2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Self {
        FamilySpec { family, params }
    }

    fn fail<T>(&self, constraint: impl Into<String>) -> Result<T> {
        Err(Error::FamilyDomain {
            family: self.to_string(),
            constraint: constraint.into(),
        })
    }

    fn arity(&self, expected: usize) -> Result<()> {
        if self.params.len() != expected {
            return self.fail(format!(
                "expects {expected} parameter(s), got {}",
                self.params.len()
            ));
        }
        Ok(())
    }

    /// Checks the parameter domain, naming the violated constraint.
    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        match self.family {
            Family::Complete | Family::Path => {
                self.arity(1)?;
                if p[0] < 1 {
                    return self.fail("n >= 1");
                }
            }
            Family::Cycle => {
                self.arity(1)?;
                if p[0] < 3 {
                    return self.fail("n >= 3");
                }
            }
            Family::Wheel => {
                self.arity(1)?;
                if p[0] < 4 {
                    return self.fail("n >= 4");
                }
            }
            Family::CompleteBipartite => {
                self.arity(2)?;
                if p[0] < 1 || p[1] < 1 {
                    return self.fail("s >= 1 and t >= 1");
                }
            }
            Family::CompleteMultipartite => {
                if p.is_empty() {
                    return self.fail("at least one part");
                }
                if p.iter().any(|&x| x < 1) {
                    return self.fail("every part size >= 1");
                }
            }
            Family::CliqueProduct => {
                if p.is_empty() {
                    return self.fail("at least one factor");
                }
                if p.iter().any(|&x| x < 2) {
                    return self.fail("every clique order p_i >= 2");
                }
            }
            Family::GKt => {
                self.arity(2)?;
                let (k, t) = (p[0], p[1]);
                if t < 1 {
                    return self.fail("t >= 1");
                }
                if k < t {
                    return self.fail("k >= t");
                }
                if t == 1 && k != 1 {
                    return self.fail("t = 1 requires k = 1");
                }
            }
            Family::FN => {
                self.arity(1)?;
                if p[0] < 6 || p[0] % 2 == 1 {
                    return self.fail("n even and n >= 6");
                }
            }
            Family::HPrime => {
                self.arity(1)?;
                if p[0] < 4 {
                    return self.fail("order >= 4");
                }
            }
            Family::HDoublePrime => {
                self.arity(1)?;
                if p[0] < 5 {
                    return self.fail("order >= 5");
                }
            }
            Family::G11
            | Family::Z2
            | Family::F8
            | Family::G61
            | Family::G62
            | Family::G63
            | Family::Petersen => self.arity(0)?,
        }
        Ok(())
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let p = &self.params;
        let g = match self.family {
            Family::Complete => complete(p[0]),
            Family::Path => {
                let n = p[0];
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?
            }
            Family::Cycle => cycle(p[0]),
            Family::Wheel => {
                let n = p[0];
                let spokes = (1..=n).map(|i| (0, i));
                let rim = (1..=n).map(|i| (i, i % n + 1));
                Graph::from_edges(n + 1, spokes.chain(rim))?
            }
            Family::CompleteBipartite => complete_multipartite(&[p[0], p[1]]),
            Family::CompleteMultipartite => complete_multipartite(p),
            Family::CliqueProduct => {
                let mut g = complete(p[0]);
                for &q in &p[1..] {
                    g = cartesian_product(&g, &complete(q))?;
                }
                g
            }
            Family::GKt if p[1] == 1 => g11(),
            Family::GKt => gkt(p[0], p[1]),
            Family::G11 => g11(),
            Family::Z2 => Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)])?,
            Family::F8 => {
                Graph::from_edges(8, F8_EDGES.iter().map(|&(a, b)| (f8_id(a), f8_id(b))))?
            }
            Family::FN => {
                let n = p[0];
                let mut edges = Vec::new();
                for a in 0..n - 2 {
                    for b in a + 1..n - 2 {
                        if (a, b) != (0, n - 3) {
                            edges.push((a, b));
                        }
                    }
                }
                edges.push((0, n - 2));
                edges.push((n - 3, n - 1));
                Graph::from_edges(n, edges)?
            }
            // w=0, w1=1, w2=2, w3=3, u1=4, u2=5
            Family::G61 => Graph::from_edges(
                6,
                [
                    (1, 0),
                    (0, 2),
                    (2, 5),
                    (5, 4),
                    (4, 1),
                    (1, 3),
                    (3, 2),
                    (3, 0),
                ],
            )?,
            Family::G62 => Graph::from_edges(
                6,
                [
                    (1, 0),
                    (0, 2),
                    (2, 4),
                    (4, 1),
                    (1, 3),
                    (3, 2),
                    (3, 0),
                    (4, 5),
                ],
            )?,
            Family::G63 => Graph::from_edges(
                6,
                [
                    (1, 0),
                    (0, 3),
                    (3, 2),
                    (2, 5),
                    (5, 4),
                    (4, 1),
                    (1, 5),
                    (0, 2),
                ],
            )?,
            Family::HPrime => {
                let n = p[0];
                let tail = (3..n).map(|i| (if i == 3 { 0 } else { i - 1 }, i));
                Graph::from_edges(n, [(0, 1), (1, 2), (0, 2)].into_iter().chain(tail))?
            }
            Family::HDoublePrime => {
                let n = p[0];
                Graph::from_edges(
                    n,
                    [(0, 1), (1, 2), (0, 2)]
                        .into_iter()
                        .chain((3..n).map(|i| (0, i))),
                )?
            }
            Family::Petersen => {
                let outer = (0..5).map(|i| (i, (i + 1) % 5));
                let spokes = (0..5).map(|i| (i, i + 5));
                let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
                Graph::from_edges(10, outer.chain(spokes).chain(inner))?
            }
        };
        Ok(g)
    }

    /// Expands range syntax (`cycle:4..12`, `complete_bipartite:1..3,2`) into
    /// every concrete spec, in lexicographic parameter order. Ranges are inclusive.
    pub fn expand_grid(text: &str) -> Result<Vec<FamilySpec>> {
        let (tag, rest) = split_tag(text);
        let family = Family::from_tag(tag).ok_or_else(|| Error::UnknownFamily(tag.to_string()))?;
        let mut axes: Vec<Vec<usize>> = Vec::new();
        if let Some(rest) = rest {
            for part in rest.split(',') {
                let part = part.trim();
                let axis = match part.split_once("..") {
                    Some((a, b)) => {
                        let lo = parse_param(text, a)?;
                        let hi = parse_param(text, b.trim_start_matches('='))?;
                        (lo..=hi).collect()
                    }
                    None => vec![parse_param(text, part)?],
                };
                axes.push(axis);
            }
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for axis in &axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    axis.iter().map(move |&x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|params| FamilySpec::new(family, params))
            .collect())
    }
}

fn split_tag(text: &str) -> (&str, Option<&str>) {
    match text.trim().split_once(':') {
        Some((tag, rest)) => (tag.trim(), Some(rest)),
        None => (text.trim(), None),
    }
}

fn parse_param(text: &str, s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::FamilyDomain {
        family: text.to_string(),
        constraint: format!("parameter `{}` is not a non-negative integer", s.trim()),
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = split_tag(s);
        let family = Family::from_tag(tag).ok_or_else(|| Error::UnknownFamily(tag.to_string()))?;
        let params = match rest {
            Some(rest) if !rest.trim().is_empty() => rest
                .split(',')
                .map(|x| parse_param(s, x))
                .collect::<Result<Vec<_>>>()?,
            _ => Vec::new(),
        };
        let spec = FamilySpec { family, params };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.tag())?;
        if !self.params.is_empty() {
            let list: Vec<String> = self.params.iter().map(ToString::to_string).collect();
            write!(f, ":{}", list.join(","))?;
        }
        Ok(())
    }
}

fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges(n, edges).expect("complete graph")
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| part_of[a] != part_of[b]);
    Graph::from_edges(n, edges).expect("complete multipartite graph")
}

fn g11() -> Graph {
    // v1=0, v2=1, u3=2, u4=3, u5=4, u6=5
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).expect("g_11")
}

fn gkt(k: usize, t: usize) -> Graph {
    let rim = 2 * t * t;
    let n = 2 * rim + 1 + k;
    let spokes = (1..=rim).map(|i| (0, i));
    let cycle = (1..=rim).map(move |i| (i, i % rim + 1));
    // u_{2t²+1} is the hub (id 0); u_i for i >= 2t²+2 is id i-1.
    let path = (rim + 1..n).map(move |id| (if id == rim + 1 { 0 } else { id - 1 }, id));
    Graph::from_edges(n, spokes.chain(cycle).chain(path)).expect("g_kt")
}

/// Named F₈ vertices in label order.
pub(crate) const F8_LABELS: [&str; 8] = ["u", "u1", "u2", "u3", "w1", "w2", "w3", "w"];

pub(crate) const F8_EDGES: [(&str, &str); 12] = [
    ("u", "u1"),
    ("u", "u2"),
    ("u", "u3"),
    ("u1", "u2"),
    ("u2", "u3"),
    ("u1", "w1"),
    ("u3", "w3"),
    ("w1", "w2"),
    ("w2", "w3"),
    ("w", "w1"),
    ("w", "w2"),
    ("w", "w3"),
];

pub(crate) fn f8_id(label: &str) -> usize {
    F8_LABELS
        .iter()
        .position(|&l| l == label)
        .expect("F8 label")
}
