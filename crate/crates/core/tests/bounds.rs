mod common;

use common::{binom2, gen};
use prclab::bounds::{
    classify_extremal, evaluate_bounds, is_complete, sufficient_conditions, Conclusion,
    ExtremalClass, Solved, CLAIM_IDS,
};
use prclab::random::{
    connected_graph, diameter_two_graph, min_degree_graph, proper_colouring, rng_from_seed,
};
use prclab::solver::{solve, Parameter};
use prclab::{colouring::is_rainbow_connected, FamilySpec, Graph, SearchConfig};
use proptest::prelude::*;
use rand::Rng;

fn solved(g: &Graph) -> Solved {
    let cfg = SearchConfig::default();
    let v = |p| {
        let r = solve(g, p, &cfg).unwrap();
        r.exact.then_some(r.value)
    };
    Solved {
        chi_prime: v(Parameter::ChiPrime),
        rc: v(Parameter::Rc),
        prc: v(Parameter::Prc),
    }
}

fn report_for(spec: &str) -> prclab::bounds::BoundReport {
    let s: FamilySpec = spec.parse().unwrap();
    let g = s.generate().unwrap();
    evaluate_bounds(&g, &solved(&g), Some(&s)).unwrap()
}

#[test]
fn clique_gap_on_k5() {
    let r = report_for("complete:5");
    let c = r.get("clique_gap").unwrap();
    assert!(c.applicable);
    assert_eq!(c.satisfied, Some(true));
}

/// prc(K_n) = n − 1 and rc(K_n) = 1 for even n, so the gap n − 2 falls one
/// short of 2ω − n − 1 = n − 1.
#[test]
fn clique_gap_fails_on_even_complete_graphs() {
    for n in [2, 4, 6] {
        let r = report_for(&format!("complete:{n}"));
        assert_eq!(r.violations(), ["clique_gap"], "K{n}");
    }
    for n in [3, 5, 7] {
        assert!(report_for(&format!("complete:{n}")).violations().is_empty());
    }
}

#[test]
fn average_degree_on_c6_and_gap_range_on_g11() {
    assert_eq!(
        report_for("cycle:6")
            .get("average_degree_bound")
            .unwrap()
            .satisfied,
        Some(true)
    );
    let r = report_for("g_11");
    assert_eq!(r.get("prc_rc_gap_range").unwrap().satisfied, Some(true));
}

#[test]
fn unsolved_values_leave_claims_unjudged() {
    let g = gen("petersen");
    let r = evaluate_bounds(&g, &Solved::default(), None).unwrap();
    assert_eq!(r.claims.len(), CLAIM_IDS.len());
    for id in [
        "diam_rc_prc_chain",
        "size_sandwich",
        "clique_gap",
        "star_upper_bound",
    ] {
        assert_eq!(r.get(id).unwrap().satisfied, None, "{id}");
    }
    for c in r.claims.values().filter(|c| !c.applicable) {
        assert_eq!(c.satisfied, None);
    }
}

#[test]
fn extremal_examples() {
    let p6 = gen("path:6");
    let e = classify_extremal(&p6, Some(5)).unwrap();
    assert_eq!(
        (e.predicted, e.consistent),
        (ExtremalClass::PrcEqM, Some(true))
    );

    // A triangle with a pendant path of length two.
    let h = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
    let prc = solved(&h).prc.unwrap();
    assert_eq!(prc, h.size() - 1);
    let e = classify_extremal(&h, Some(prc)).unwrap();
    assert_eq!(
        (e.predicted, e.consistent),
        (ExtremalClass::PrcEqMMinus1, Some(true))
    );

    let e = classify_extremal(&gen("complete:4"), Some(3)).unwrap();
    assert_eq!(
        (e.predicted, e.consistent),
        (ExtremalClass::Neither, Some(true))
    );
    let e = classify_extremal(&gen("complete:3"), Some(3)).unwrap();
    assert_eq!(e.predicted, ExtremalClass::PrcEqM);
}

fn fired(spec: &str) -> Vec<(String, Conclusion)> {
    let g = gen(spec);
    let rc = solved(&g).rc;
    sufficient_conditions(&g, rc)
        .unwrap()
        .into_iter()
        .map(|r| (r.rule, r.conclusion))
        .collect()
}

#[test]
fn sufficient_condition_examples() {
    let k44 = fired("complete_bipartite:4,4");
    assert!(k44.contains(&("diameter_two_rule".into(), Conclusion::PrcEqChi)));
    assert!(k44.contains(&("bipartite_class_one".into(), Conclusion::ChiEqDelta)));
    assert_eq!(solved(&gen("complete_bipartite:4,4")).prc, Some(4));

    let k111 = fired("complete_multipartite:1,1,1");
    assert!(k111.contains(&(
        "complete_multipartite_value".into(),
        Conclusion::PrcEquals(3)
    )));

    let degree_rules = [
        "min_degree_half_rule",
        "degree_sum_rule",
        "min_degree_half_large_rule",
        "degree_sum_large_rule",
        "min_degree_third_rule",
        "dense_rule",
    ];
    let f8 = fired("f8");
    assert!(
        f8.iter().all(|(r, _)| !degree_rules.contains(&r.as_str())),
        "{f8:?}"
    );

    let g = gen("f_n:8");
    assert_eq!(g.size(), binom2(6) + 1);
    assert!(fired("f_n:8").iter().all(|(r, _)| r != "dense_rule"));
    let s = solved(&g);
    assert_eq!((s.prc, s.chi_prime), (Some(6), Some(5)));
}

#[test]
fn girth_rule_needs_a_cycle() {
    let r = report_for("path:5");
    assert!(!r.get("girth_rule").unwrap().applicable);
    let r = report_for("cycle:9");
    assert!(r.get("cycle_value").unwrap().satisfied == Some(true));
}

#[test]
fn diameter_two_proper_colourings_are_rainbow() {
    let mut rng = rng_from_seed(0xd1a2);
    for _ in 0..200 {
        let n = rng.gen_range(3..=9);
        let g = diameter_two_graph(&mut rng, n);
        for _ in 0..5 {
            let extra = rng.gen_range(0..4);
            let c = proper_colouring(&mut rng, &g, extra);
            assert!(is_rainbow_connected(&g, &c).unwrap().connected);
        }
    }
}

#[test]
fn high_minimum_degree_proper_colourings_are_rainbow() {
    let mut rng = rng_from_seed(0x5e1f);
    for _ in 0..100 {
        let n: usize = rng.gen_range(9..=12);
        // Half the instances at δ ≥ (n − 2)/2, half at δ ≥ (n + 3)/3.
        let d = if rng.gen_bool(0.5) {
            (n - 2).div_ceil(2)
        } else {
            (n + 3).div_ceil(3)
        };
        let g = min_degree_graph(&mut rng, n, d);
        for _ in 0..3 {
            let c = proper_colouring(&mut rng, &g, 0);
            assert!(is_rainbow_connected(&g, &c).unwrap().connected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every applicable claim holds on random solved graphs, except the
    /// clique gap on even complete graphs.
    #[test]
    fn claims_hold_on_random_graphs(seed in any::<u64>(), n in 3usize..=8, p in 0.1f64..0.9) {
        let g = connected_graph(&mut rng_from_seed(seed), n, p);
        let s = solved(&g);
        prop_assume!(s.chi_prime.is_some() && s.rc.is_some() && s.prc.is_some());
        let r = evaluate_bounds(&g, &s, None).unwrap();
        for id in r.violations() {
            prop_assert!(id == "clique_gap" && is_complete(&g) && n % 2 == 0, "{id} on {:?}", g.edges());
        }
    }
}
