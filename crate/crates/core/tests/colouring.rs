mod common;

use common::{gen, naive_pair, naive_proper, naive_rainbow, path_is_rainbow};
use prclab::colouring::{
    is_proper, is_rainbow_connected, is_rainbow_connected_with, rainbow_path, Certificate,
    RainbowOptions,
};
use prclab::graph::connected_catalogue;
use prclab::random::{colouring, connected_graph, proper_colouring, rng_from_seed};
use prclab::{verify, EdgeColouring, Error};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn bitmask_checker_matches_path_enumeration_on_small_catalogue() {
    let mut rng = rng_from_seed(11);
    for n in 2..=5 {
        for g in connected_catalogue(n) {
            for _ in 0..20 {
                let k = rng.gen_range(1..=4);
                let c = colouring(&mut rng, g.size(), k);
                let fast = is_rainbow_connected(&g, &c).unwrap().connected;
                assert_eq!(
                    fast,
                    naive_rainbow(&g, c.colours()),
                    "{:?} {:?}",
                    g.edges(),
                    c.colours()
                );
                assert_eq!(
                    is_proper(&g, &c).unwrap().proper,
                    naive_proper(&g, c.colours())
                );
            }
        }
    }
}

#[test]
fn proper_colourings_of_complete_graphs_are_rainbow() {
    let mut rng = rng_from_seed(5);
    for n in 2..=8 {
        let g = gen(&format!("complete:{n}"));
        for extra in 0..4 {
            let c = proper_colouring(&mut rng, &g, extra);
            assert!(is_rainbow_connected(&g, &c).unwrap().connected);
        }
    }
}

#[test]
fn full_witness_lists_every_pair_with_shortest_paths() {
    let (g, c) = prclab::constructions::cycle_colouring(6).unwrap();
    let opts = RainbowOptions {
        full_witness: true,
        ..Default::default()
    };
    let r = is_rainbow_connected_with(&g, &c, &opts).unwrap();
    let pairs = r.witness.unwrap().pairs;
    assert_eq!(pairs.len(), 15);
    for p in pairs {
        let path = p.path.unwrap();
        assert!(path_is_rainbow(&g, &c, &path));
        let d = g.distances_from(p.u)[p.v].unwrap();
        assert_eq!(path.len(), d + 1);
    }
}

#[test]
fn witness_is_lexicographically_least_shortest() {
    // C4 with colours 1,2,1,2: both 0-2 paths have length 2 and are rainbow.
    let g = gen("cycle:4");
    let c = EdgeColouring::new(vec![1, 2, 2, 1], 2).unwrap();
    assert_eq!(rainbow_path(&g, &c, 0, 2).unwrap(), Some(vec![0, 1, 2]));
}

#[test]
fn verify_reports_first_unwitnessed_pair() {
    let g = gen("path:4");
    let c = EdgeColouring::new(vec![1, 2, 1], 2).unwrap();
    let r = verify(&g, &c).unwrap();
    assert!(r.is_proper);
    assert!(!r.is_rainbow_connected);
    assert_eq!(r.unwitnessed_pair, Some((0, 3)));
    assert!(!r.is_prc_certificate);
}

#[test]
fn palette_above_cap_is_refused() {
    let g = gen("path:30");
    let c = EdgeColouring::all_distinct(g.size());
    assert!(matches!(
        is_rainbow_connected(&g, &c),
        Err(Error::ColourCapExceeded { .. })
    ));
    let opts = RainbowOptions {
        colour_cap: 40,
        ..Default::default()
    };
    assert!(is_rainbow_connected_with(&g, &c, &opts).unwrap().connected);
}

#[test]
fn certificate_json_shape() {
    let g = gen("path:3");
    let c = EdgeColouring::new(vec![1, 2], 2).unwrap();
    let json = c.to_certificate(&g).to_json();
    assert_eq!(json, r#"{"n":3,"edges":[[0,1,1],[1,2,2]],"k":2}"#);
    let back = Certificate::from_json(&json)
        .unwrap()
        .to_colouring(&g)
        .unwrap();
    assert_eq!(back, c);
    let wrong = Certificate::from_json(r#"{"n":3,"edges":[[0,2,1],[1,2,2]],"k":2}"#).unwrap();
    assert!(wrong.to_colouring(&g).is_err());
}

fn small_instance() -> impl Strategy<Value = (prclab::Graph, EdgeColouring)> {
    (any::<u64>(), 2usize..=7, 0.0f64..0.7, 1u32..=5).prop_map(|(seed, n, p, k)| {
        let mut rng = rng_from_seed(seed);
        let g = connected_graph(&mut rng, n, p);
        let c = colouring(&mut rng, g.size(), k);
        (g, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn checker_agrees_with_enumeration((g, c) in small_instance()) {
        let r = is_rainbow_connected(&g, &c).unwrap();
        prop_assert_eq!(r.connected, naive_rainbow(&g, c.colours()));
        if let Some((u, v)) = r.first_unwitnessed {
            prop_assert!(!naive_pair(&g, c.colours(), u, v));
        }
    }

    #[test]
    fn returned_paths_are_rainbow((g, c) in small_instance(), a in 0usize..7, b in 0usize..7) {
        let (u, v) = (a % g.order(), b % g.order());
        match rainbow_path(&g, &c, u, v).unwrap() {
            Some(path) => {
                prop_assert!(path_is_rainbow(&g, &c, &path));
                prop_assert_eq!((path[0], *path.last().unwrap()), (u, v));
            }
            None => prop_assert!(!naive_pair(&g, c.colours(), u, v)),
        }
    }

    #[test]
    fn fresh_colour_refinement_preserves_properties((g, c) in small_instance(), pick in any::<usize>()) {
        prop_assume!(g.size() > 0);
        let before = verify(&g, &c).unwrap();
        let mut d = c.clone();
        let fresh = d.recolour_fresh(pick % g.size());
        prop_assert_eq!(fresh, c.palette() + 1);
        let after = verify(&g, &d).unwrap();
        prop_assert!(!before.is_proper || after.is_proper);
        prop_assert!(!before.is_rainbow_connected || after.is_rainbow_connected);
    }

    #[test]
    fn normalisation_keeps_verdicts((g, c) in small_instance()) {
        let n = c.normalized();
        prop_assert_eq!(n.colours_used(), c.colours_used());
        let (a, b) = (verify(&g, &c).unwrap(), verify(&g, &n).unwrap());
        prop_assert_eq!((a.is_proper, a.is_rainbow_connected), (b.is_proper, b.is_rainbow_connected));
    }
}
