//! Known inequalities, exact values and sufficient conditions for `prc`,
//! `rc` and `χ′`, each as a named claim evaluated on a graph and whatever
//! parameter values have been solved.
//!
//! A claim has a hypothesis (its *applicability*) and a conclusion. An
//! inapplicable claim is never judged. An applicable claim whose conclusion
//! needs a value that is missing is left unjudged as well.

mod structure;

pub use structure::{
    as_complete_bipartite, as_complete_multipartite, as_cycle, as_wheel,
    hamiltonian_complement_witness, hamiltonian_cycle, is_complete, is_h_double_prime, is_h_prime,
    is_triangle,
};

use crate::error::{Error, Result};
use crate::graph::{
    diameter, girth, is_bipartite, is_isomorphic, is_overfull, maximum_clique, Family, FamilySpec,
    Graph,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parameter values known for a graph. Only exact values belong here.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solved {
    pub chi_prime: Option<usize>,
    pub rc: Option<usize>,
    pub prc: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub applicable: bool,
    /// `None` when inapplicable or when a needed value is unknown.
    pub satisfied: Option<bool>,
    pub details: String,
}

/// Claim results keyed by claim id.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub claims: BTreeMap<String, ClaimResult>,
}

impl BoundReport {
    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.get(id)
    }

    /// Ids of applicable claims that evaluated to false.
    pub fn violations(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|(_, c)| c.satisfied == Some(false))
            .map(|(id, _)| id.as_str())
            .collect()
    }

    fn put(&mut self, id: &str, applicable: bool, satisfied: Option<bool>, details: String) {
        let satisfied = if applicable { satisfied } else { None };
        self.claims.insert(
            id.to_string(),
            ClaimResult {
                applicable,
                satisfied,
                details,
            },
        );
    }
}

/// Every claim id [`evaluate_bounds`] can emit, in a stable order.
pub const CLAIM_IDS: &[&str] = &[
    "diam_rc_prc_chain",
    "size_sandwich",
    "prc_eq_size_iff_tree_or_triangle",
    "prc_eq_size_minus_one_iff_h_class",
    "complete_graph_value",
    "complete_graph_rc",
    "cycle_value",
    "clique_product_sum_bounds",
    "clique_product_class",
    "star_upper_bound",
    "hamiltonian_complement_bound",
    "clique_gap",
    "prc_rc_gap_range",
    "prc_chi_gap_range",
    "min_degree_rc_bounds",
    "min_degree_gap",
    "gkt_gap",
    "tree_value",
    "girth_rule",
    "diameter_two_rule",
    "wheel_value",
    "complete_bipartite_value",
    "bipartite_class_one",
    "complete_multipartite_value",
    "min_degree_half_rule",
    "degree_sum_rule",
    "min_degree_half_large_rule",
    "degree_sum_large_rule",
    "min_degree_third_rule",
    "average_degree_bound",
    "size_degree_bound",
    "dense_rule",
];

struct Ctx<'a> {
    g: &'a Graph,
    n: usize,
    m: usize,
    delta: usize,
    min_deg: usize,
    diam: usize,
    s: Solved,
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "?".to_string(), |x| x.to_string())
}

/// `Some(f(..))` when every value is present.
macro_rules! need {
    ($($v:expr),+ ; $body:expr) => {
        (|| Some({ $(let _ = $v?;)+ $body }))()
    };
}

/// Minimum degree sum over non-adjacent pairs; `None` for complete graphs.
fn min_nonadjacent_degree_sum(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let s = g.degree(u) + g.degree(v);
                best = Some(best.map_or(s, |b: usize| b.min(s)));
            }
        }
    }
    best
}

/// Graphs allowed to break the dense-graph rule.
pub fn dense_rule_exceptions() -> Vec<(&'static str, Graph)> {
    ["path:4", "z2", "g6_3"]
        .into_iter()
        .map(|s| (s, s.parse::<FamilySpec>().unwrap().generate().unwrap()))
        .collect()
}

/// Evaluates every claim on a connected graph with order at least 2.
/// `family` adds claims that are only stated for a named family.
pub fn evaluate_bounds(
    g: &Graph,
    solved: &Solved,
    family: Option<&FamilySpec>,
) -> Result<BoundReport> {
    if g.order() < 2 {
        return Err(Error::EmptyGraph);
    }
    let diam = diameter(g).ok_or(Error::Disconnected)?;
    let c = Ctx {
        g,
        n: g.order(),
        m: g.size(),
        delta: g.max_degree(),
        min_deg: g.min_degree(),
        diam,
        s: *solved,
    };
    let mut r = BoundReport::default();
    chain_claims(&c, &mut r);
    extremal_claims(&c, &mut r);
    family_value_claims(&c, &mut r);
    upper_bound_claims(&c, &mut r);
    gap_claims(&c, &mut r);
    degree_rules(&c, &mut r);
    size_claims(&c, &mut r);
    family_context_claims(&c, family, &mut r);
    Ok(r)
}

fn chain_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, rc, prc } = c.s;
    let ok = need!(chi_prime, rc, prc; {
        let (x, rc, p) = (chi_prime.unwrap(), rc.unwrap(), prc.unwrap());
        c.diam <= rc && rc <= p && x <= p
    });
    r.put(
        "diam_rc_prc_chain",
        true,
        ok,
        format!(
            "diam={} rc={} prc={} chi'={}",
            c.diam,
            fmt_opt(rc),
            fmt_opt(prc),
            fmt_opt(chi_prime)
        ),
    );
    let ok = need!(chi_prime, rc, prc; {
        let (x, rc, p) = (chi_prime.unwrap(), rc.unwrap(), prc.unwrap());
        rc.max(x) <= p && p <= c.m
    });
    r.put(
        "size_sandwich",
        true,
        ok,
        format!(
            "max(rc,chi')<=prc<=m with rc={} chi'={} prc={} m={}",
            fmt_opt(rc),
            fmt_opt(chi_prime),
            fmt_opt(prc),
            c.m
        ),
    );
}

fn extremal_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let prc = c.s.prc;
    let predicted = c.g.is_tree() || is_triangle(c.g);
    r.put(
        "prc_eq_size_iff_tree_or_triangle",
        true,
        prc.map(|p| (p == c.m) == predicted),
        format!(
            "prc={} m={} tree_or_triangle={predicted}",
            fmt_opt(prc),
            c.m
        ),
    );
    let hp = is_h_prime(c.g);
    let hpp = is_h_double_prime(c.g);
    r.put(
        "prc_eq_size_minus_one_iff_h_class",
        true,
        prc.map(|p| (p + 1 == c.m) == (hp || hpp)),
        format!(
            "prc={} m={} h_prime={hp} h_double_prime={hpp}",
            fmt_opt(prc),
            c.m
        ),
    );
}

fn family_value_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, rc, prc } = c.s;
    let complete = is_complete(c.g);
    let want = if c.n.is_multiple_of(2) { c.n - 1 } else { c.n };
    r.put(
        "complete_graph_value",
        complete,
        need!(prc, chi_prime; prc.unwrap() == want && chi_prime.unwrap() == want),
        format!(
            "n={} expected={want} prc={} chi'={}",
            c.n,
            fmt_opt(prc),
            fmt_opt(chi_prime)
        ),
    );
    r.put(
        "complete_graph_rc",
        complete,
        rc.map(|x| x == 1),
        format!("rc={}", fmt_opt(rc)),
    );
    let cycle = as_cycle(c.g).filter(|&n| n >= 4);
    let half = c.n.div_ceil(2);
    r.put(
        "cycle_value",
        cycle.is_some(),
        prc.map(|p| p == half && rc.is_none_or(|x| x == half)),
        format!("ceil(n/2)={half} prc={} rc={}", fmt_opt(prc), fmt_opt(rc)),
    );
    let tree = c.g.is_tree();
    r.put(
        "tree_value",
        tree,
        prc.map(|p| p == c.n - 1 && rc.is_none_or(|x| x == c.n - 1)),
        format!("n-1={} prc={} rc={}", c.n - 1, fmt_opt(prc), fmt_opt(rc)),
    );
    let wheel = as_wheel(c.g);
    r.put(
        "wheel_value",
        wheel.is_some(),
        prc.map(|p| Some(p) == wheel),
        format!("rim={} prc={}", fmt_opt(wheel), fmt_opt(prc)),
    );
    let kst = as_complete_bipartite(c.g);
    r.put(
        "complete_bipartite_value",
        kst.is_some(),
        prc.map(|p| kst.is_some_and(|(s, t)| p == s.max(t))),
        format!("parts={kst:?} prc={}", fmt_opt(prc)),
    );
    let bip = is_bipartite(c.g);
    r.put(
        "bipartite_class_one",
        bip,
        chi_prime.map(|x| x == c.delta),
        format!("delta={} chi'={}", c.delta, fmt_opt(chi_prime)),
    );
    let parts = as_complete_multipartite(c.g);
    let overfull = is_overfull(c.g);
    let expect = if overfull { c.delta + 1 } else { c.delta };
    r.put(
        "complete_multipartite_value",
        parts.is_some(),
        prc.map(|p| p == expect),
        format!(
            "parts={parts:?} overfull={overfull} expected={expect} prc={}",
            fmt_opt(prc)
        ),
    );
}

fn upper_bound_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, prc, .. } = c.s;
    let ok = need!(chi_prime, prc; {
        let (x, p) = (chi_prime.unwrap(), prc.unwrap());
        c.delta.max(c.diam) <= p && p <= x + (c.n - 1 - c.delta)
    });
    r.put(
        "star_upper_bound",
        true,
        ok,
        format!(
            "max(delta,diam)={} prc={} chi'+(n-1-delta)={}",
            c.delta.max(c.diam),
            fmt_opt(prc),
            chi_prime.map_or("?".into(), |x| (x + c.n - 1 - c.delta).to_string())
        ),
    );
    let witness = if c.n <= 16 {
        hamiltonian_complement_witness(c.g)
    } else {
        None
    };
    r.put(
        "hamiltonian_complement_bound",
        witness.is_some(),
        prc.map(|p| 2 * p <= c.n + c.delta + 2),
        format!(
            "witness={witness:?} prc={} (n+delta)/2+1={}",
            fmt_opt(prc),
            (c.n + c.delta) as f64 / 2.0 + 1.0
        ),
    );
}

fn gap_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, rc, prc } = c.s;
    let omega = if c.n <= 64 {
        Some(maximum_clique(c.g).len())
    } else {
        None
    };
    let applies = omega.is_some_and(|w| 2 * w > c.n);
    r.put(
        "clique_gap",
        applies,
        need!(rc, prc, omega; prc.unwrap() as i64 - rc.unwrap() as i64 >= 2 * omega.unwrap() as i64 - c.n as i64 - 1),
        format!("omega={} prc={} rc={} n={}", fmt_opt(omega), fmt_opt(prc), fmt_opt(rc), c.n),
    );
    r.put(
        "prc_rc_gap_range",
        true,
        need!(rc, prc; prc.unwrap() >= rc.unwrap() && prc.unwrap() - rc.unwrap() < c.n),
        format!("prc={} rc={} n-1={}", fmt_opt(prc), fmt_opt(rc), c.n - 1),
    );
    r.put(
        "prc_chi_gap_range",
        c.n >= 3,
        need!(chi_prime, prc; prc.unwrap() >= chi_prime.unwrap() && prc.unwrap() - chi_prime.unwrap() + 3 <= c.n),
        format!("prc={} chi'={} n-3={}", fmt_opt(prc), fmt_opt(chi_prime), c.n.saturating_sub(3)),
    );
    let (n, d) = (c.n as i64, c.min_deg as i64);
    r.put(
        "min_degree_rc_bounds",
        c.n >= 3 && d >= 3,
        rc.map(|x| {
            let x = x as i64;
            4 * x <= 3 * n && (d < 4 || x * (d + 1) <= 3 * n + 3 * (d + 1))
        }),
        format!("delta_min={d} n={n} rc={}", fmt_opt(rc)),
    );
    // δ ≥ 1 + √(3n+4)  ⇔  δ ≥ 1 and (δ-1)² ≥ 3n+4.
    let applies = d >= 1 && (d - 1) * (d - 1) >= 3 * n + 4;
    r.put(
        "min_degree_gap",
        applies,
        need!(rc, prc; {
            let gap = prc.unwrap() as i64 - rc.unwrap() as i64;
            // gap ≥ δ − 3n/(δ+1) − 3, multiplied through by δ+1 > 0.
            (gap - d + 3) * (d + 1) + 3 * n >= 0
        }),
        format!(
            "delta_min={d} n={n} prc={} rc={}",
            fmt_opt(prc),
            fmt_opt(rc)
        ),
    );
    let gir = girth(c.g);
    let applies = matches!((rc, gir), (Some(x), Some(g)) if x + 2 < g);
    r.put(
        "girth_rule",
        applies,
        need!(rc, prc; prc == rc),
        format!(
            "girth={} rc={} prc={}",
            fmt_opt(gir),
            fmt_opt(rc),
            fmt_opt(prc)
        ),
    );
}

fn degree_rules(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, prc, .. } = c.s;
    let eq = need!(chi_prime, prc; chi_prime == prc);
    let details = format!(
        "n={} delta_min={} prc={} chi'={}",
        c.n,
        c.min_deg,
        fmt_opt(prc),
        fmt_opt(chi_prime)
    );
    let (n, d) = (c.n, c.min_deg);
    let sum = min_nonadjacent_degree_sum(c.g);
    r.put(
        "diameter_two_rule",
        n >= 3 && c.diam == 2,
        eq,
        format!("diam={} {details}", c.diam),
    );
    r.put("min_degree_half_rule", 2 * d + 1 >= n, eq, details.clone());
    r.put(
        "degree_sum_rule",
        n >= 3 && sum.is_none_or(|s| s + 1 >= n),
        eq,
        format!("min_nonadjacent_sum={} {details}", fmt_opt(sum)),
    );
    r.put(
        "min_degree_half_large_rule",
        n >= 9 && 2 * d + 2 >= n,
        eq,
        details.clone(),
    );
    r.put(
        "degree_sum_large_rule",
        n >= 9 && sum.is_none_or(|s| s + 2 >= n),
        eq,
        format!("min_nonadjacent_sum={} {details}", fmt_opt(sum)),
    );
    // δ ≥ (n+k)/3 for some integer k ≥ 3  ⇔  3δ ≥ n + 3.
    r.put(
        "min_degree_third_rule",
        n >= 9 && 3 * d >= n + 3,
        eq,
        details,
    );
}

fn size_claims(c: &Ctx<'_>, r: &mut BoundReport) {
    let Solved { chi_prime, prc, .. } = c.s;
    let avg_ceil = (2 * c.m).div_ceil(c.n);
    r.put(
        "average_degree_bound",
        true,
        prc.map(|p| p >= avg_ceil),
        format!("ceil(2m/n)={avg_ceil} prc={}", fmt_opt(prc)),
    );
    let k = 2 * c.m / c.n;
    r.put(
        "size_degree_bound",
        true,
        prc.map(|p| p >= k),
        format!("largest k with m >= kn/2 is {k}; prc={}", fmt_opt(prc)),
    );
    let threshold = if c.n >= 2 {
        (c.n - 2) * (c.n - 2).saturating_sub(1) / 2 + 2
    } else {
        usize::MAX
    };
    let applies = c.n >= 3 && c.m >= threshold;
    let exception = dense_rule_exceptions()
        .into_iter()
        .find(|(_, h)| is_isomorphic(c.g, h))
        .map(|(name, _)| name);
    r.put(
        "dense_rule",
        applies,
        need!(chi_prime, prc; chi_prime == prc || exception.is_some()),
        format!(
            "m={} threshold={threshold} prc={} chi'={} exception={}",
            c.m,
            fmt_opt(prc),
            fmt_opt(chi_prime),
            exception.unwrap_or("none")
        ),
    );
}

fn family_context_claims(c: &Ctx<'_>, family: Option<&FamilySpec>, r: &mut BoundReport) {
    let Solved { chi_prime, rc, prc } = c.s;
    let product = family.filter(|f| f.family == Family::CliqueProduct);
    let (lo, hi) = product.map_or((0, 0), |f| {
        let lo = f.params.iter().map(|p| p - 1).sum();
        let hi = f
            .params
            .iter()
            .map(|&p| if p % 2 == 0 { p - 1 } else { p })
            .sum();
        (lo, hi)
    });
    r.put(
        "clique_product_sum_bounds",
        product.is_some(),
        prc.map(|p| lo <= p && p <= hi),
        format!("sum(p_i-1)={lo} sum(chi'(K_p_i))={hi} prc={}", fmt_opt(prc)),
    );
    r.put(
        "clique_product_class",
        product.is_some(),
        need!(chi_prime, prc; chi_prime == prc),
        format!("prc={} chi'={}", fmt_opt(prc), fmt_opt(chi_prime)),
    );
    let gkt = family.filter(|f| f.family == Family::GKt);
    let (k, t) = gkt.map_or((0, 0), |f| (f.params[0], f.params[1]));
    let structure_ok = c.delta == 2 * t * t + 1 && c.diam == 2 * t * t + 1 + k;
    r.put(
        "gkt_gap",
        gkt.is_some(),
        if structure_ok {
            need!(rc, prc; prc.unwrap() >= rc.unwrap() + t)
        } else {
            Some(false)
        },
        format!(
            "k={k} t={t} delta={} diam={} rc={} prc={}",
            c.delta,
            c.diam,
            fmt_opt(rc),
            fmt_opt(prc)
        ),
    );
}

/// What the structure of a graph says about whether `prc` attains `m` or `m − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalClass {
    PrcEqM,
    PrcEqMMinus1,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub predicted: ExtremalClass,
    /// `tree`, `triangle`, `h_prime`, `h_double_prime` or `none`.
    pub reason: String,
    pub observed: Option<ExtremalClass>,
    pub consistent: Option<bool>,
}

pub fn classify_extremal(g: &Graph, prc: Option<usize>) -> Result<ExtremalReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (predicted, reason) = if g.is_tree() {
        (ExtremalClass::PrcEqM, "tree")
    } else if is_triangle(g) {
        (ExtremalClass::PrcEqM, "triangle")
    } else if is_h_prime(g) {
        (ExtremalClass::PrcEqMMinus1, "h_prime")
    } else if is_h_double_prime(g) {
        (ExtremalClass::PrcEqMMinus1, "h_double_prime")
    } else {
        (ExtremalClass::Neither, "none")
    };
    let m = g.size();
    let observed = prc.map(|p| {
        if p == m {
            ExtremalClass::PrcEqM
        } else if p + 1 == m {
            ExtremalClass::PrcEqMMinus1
        } else {
            ExtremalClass::Neither
        }
    });
    Ok(ExtremalReport {
        predicted,
        reason: reason.to_string(),
        observed,
        consistent: observed.map(|o| o == predicted),
    })
}

/// Conclusion guaranteed by a sufficient condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    PrcEqChi,
    /// `prc = χ′` unless the graph is one of the listed exceptions.
    PrcEqChiOrException,
    PrcEqRc,
    ChiEqDelta,
    /// The exact value is known outright.
    PrcEquals(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiredRule {
    pub rule: String,
    pub conclusion: Conclusion,
}

/// Sufficient conditions whose hypotheses hold for `g`. The girth rule needs
/// `rc` and is only checked when it is supplied.
pub fn sufficient_conditions(g: &Graph, rc: Option<usize>) -> Result<Vec<FiredRule>> {
    let report = evaluate_bounds(
        g,
        &Solved {
            rc,
            ..Default::default()
        },
        None,
    )?;
    let mut fired = Vec::new();
    let mut fire = |rule: &str, conclusion| {
        if report.get(rule).is_some_and(|c| c.applicable) {
            fired.push(FiredRule {
                rule: rule.to_string(),
                conclusion,
            });
        }
    };
    fire("diameter_two_rule", Conclusion::PrcEqChi);
    fire("bipartite_class_one", Conclusion::ChiEqDelta);
    if report
        .get("complete_multipartite_value")
        .is_some_and(|c| c.applicable)
    {
        let overfull = is_overfull(g);
        let d = g.max_degree();
        fire(
            "complete_multipartite_value",
            Conclusion::PrcEquals(if overfull { d + 1 } else { d }),
        );
    }
    fire("min_degree_half_rule", Conclusion::PrcEqChi);
    fire("degree_sum_rule", Conclusion::PrcEqChi);
    fire("min_degree_half_large_rule", Conclusion::PrcEqChi);
    fire("degree_sum_large_rule", Conclusion::PrcEqChi);
    fire("min_degree_third_rule", Conclusion::PrcEqChi);
    fire("dense_rule", Conclusion::PrcEqChiOrException);
    fire("girth_rule", Conclusion::PrcEqRc);
    Ok(fired)
}
