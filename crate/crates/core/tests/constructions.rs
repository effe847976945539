mod common;

use common::{gen, naive_proper, naive_rainbow};
use prclab::bounds::{hamiltonian_complement_witness, hamiltonian_cycle};
use prclab::constructions::{
    clique_rc_colouring, cycle_colouring, f8_colouring, g11_colouring, g6_colouring, gkt_colouring,
    hamiltonian_complement_colouring, spanning_star_colouring, spanning_star_from,
    spanning_tree_rc_colouring, wheel_colouring, F8Colouring,
};
use prclab::graph::{connected_catalogue, maximum_clique};
use prclab::solver::{chromatic_index, decide_prc_at_k, misra_gries};
use prclab::{verify, EdgeColouring, Graph, SearchConfig};

/// The star at the first maximum-degree vertex plus every edge coloured
/// above `base_palette` forms a spanning tree with distinct colours.
fn star_tree_is_rainbow(g: &Graph, c: &EdgeColouring, base_palette: u32) -> bool {
    let delta = g.max_degree();
    let w = (0..g.order()).find(|&v| g.degree(v) == delta).unwrap();
    let tree: Vec<usize> = (0..g.size())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            a == w || b == w || c.colour(e) > base_palette
        })
        .collect();
    let mut colours: Vec<u32> = tree.iter().map(|&e| c.colour(e)).collect();
    colours.sort_unstable();
    colours.dedup();
    let spanning = Graph::from_edges(g.order(), tree.iter().map(|&e| g.edge(e))).unwrap();
    tree.len() == g.order() - 1 && colours.len() == tree.len() && spanning.is_connected()
}

#[test]
fn spanning_star_on_catalogue_and_petersen() {
    let cfg = SearchConfig::default();
    let graphs = (2..=6)
        .flat_map(connected_catalogue)
        .chain([gen("petersen")]);
    for g in graphs {
        let chi = chromatic_index(&g, &cfg).unwrap().value;
        let c = spanning_star_colouring(&g, &cfg).unwrap();
        assert!(naive_proper(&g, c.colours()) && naive_rainbow(&g, c.colours()));
        let budget = chi + g.order() - 1 - g.max_degree();
        assert_eq!(c.palette() as usize, budget);
        assert!(star_tree_is_rainbow(&g, &c, chi as u32));
    }
}

#[test]
fn spanning_star_from_any_proper_colouring() {
    let g = gen("petersen");
    let base = misra_gries(&g);
    let c = spanning_star_from(&g, &base).unwrap();
    assert!(verify(&g, &c).unwrap().is_prc_certificate);
    assert!(star_tree_is_rainbow(&g, &c, base.palette()));
    assert!(spanning_star_from(&g, &EdgeColouring::monochromatic(g.size())).is_err());
}

#[test]
fn spanning_star_on_stars_adds_nothing() {
    for p in 1..=6 {
        let g = gen(&format!("complete_bipartite:1,{p}"));
        let c = spanning_star_colouring(&g, &SearchConfig::default()).unwrap();
        assert_eq!(c.palette() as usize, p);
    }
    let c = spanning_star_colouring(&gen("path:4"), &SearchConfig::default()).unwrap();
    assert_eq!(c.palette(), 3);
}

#[test]
fn cycles() {
    for n in 4..=16 {
        let (g, c) = cycle_colouring(n).unwrap();
        assert_eq!(c.palette() as usize, n.div_ceil(2));
        assert!(
            naive_proper(&g, c.colours()) && naive_rainbow(&g, c.colours()),
            "C{n}"
        );
    }
    assert_eq!(cycle_colouring(5).unwrap().1.palette(), 3);
    assert!(cycle_colouring(3).is_err());
    assert_eq!(
        decide_prc_at_k(&gen("cycle:7"), 3, &SearchConfig::default())
            .unwrap()
            .answer(),
        Some(false)
    );
}

#[test]
fn wheels() {
    for n in 4..=12 {
        let (g, c) = wheel_colouring(n).unwrap();
        assert_eq!(c.palette() as usize, n);
        assert!(
            naive_proper(&g, c.colours()) && naive_rainbow(&g, c.colours()),
            "W{n}"
        );
    }
    let (g, c) = wheel_colouring(4).unwrap();
    let rim: Vec<u32> = [(1, 2), (2, 3), (3, 4), (4, 1)]
        .iter()
        .map(|&(a, b)| c.colour(g.edge_index(a, b).unwrap()))
        .collect();
    assert_eq!(rim, [3, 4, 1, 2]);
    assert_eq!(
        decide_prc_at_k(&g, 3, &SearchConfig::default())
            .unwrap()
            .answer(),
        Some(false)
    );
}

#[test]
fn gkt_rc_colourings() {
    for (k, t) in [(2, 2), (3, 2), (3, 3)] {
        let (g, c) = gkt_colouring(k, t).unwrap();
        let r = verify(&g, &c).unwrap();
        assert_eq!(c.palette() as usize, 2 * t * t + 1 + k);
        assert!(r.is_rainbow_connected && !r.is_proper, "k={k} t={t}");
    }
    assert!(gkt_colouring(1, 1).is_err());
}

#[test]
fn fixed_gadget_colourings() {
    let (g, c) = g11_colouring();
    assert!(naive_proper(&g, c.colours()) && naive_rainbow(&g, c.colours()));
    assert_eq!(c.palette(), 5);
    let (g, c) = f8_colouring(F8Colouring::Proper3);
    assert!(naive_proper(&g, c.colours()) && !naive_rainbow(&g, c.colours()));
    let (g, c) = f8_colouring(F8Colouring::ProperRainbow4);
    assert!(naive_proper(&g, c.colours()) && naive_rainbow(&g, c.colours()));
    let (g, c) = f8_colouring(F8Colouring::Rainbow3);
    assert!(naive_rainbow(&g, c.colours()) && c.palette() == 3);
    for (i, palette, proper, rainbow) in
        [(1, 3, true, true), (2, 4, true, true), (3, 3, true, false)]
    {
        let (g, c) = g6_colouring(i).unwrap();
        assert_eq!(c.palette(), palette);
        assert_eq!(
            (
                naive_proper(&g, c.colours()),
                naive_rainbow(&g, c.colours())
            ),
            (proper, rainbow),
            "G6.{i}"
        );
    }
}

#[test]
fn clique_rc_bound() {
    // K5 plus a pendant vertex.
    let g = Graph::from_edges(
        6,
        (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .chain([(4, 5)]),
    )
    .unwrap();
    let clique = maximum_clique(&g);
    let c = clique_rc_colouring(&g, &clique).unwrap();
    assert_eq!(c.palette(), 2);
    assert!(naive_rainbow(&g, c.colours()));
    assert!(clique_rc_colouring(&g, &[0, 5]).is_err());
    for g in (2..=6).flat_map(connected_catalogue) {
        let clique = maximum_clique(&g);
        let c = clique_rc_colouring(&g, &clique).unwrap();
        assert_eq!(c.palette() as usize, g.order() + 1 - clique.len());
        assert!(naive_rainbow(&g, c.colours()));
        let t = spanning_tree_rc_colouring(&g).unwrap();
        assert!(naive_rainbow(&g, t.colours()));
    }
}

#[test]
fn hamiltonian_complement_rejects_bad_cycles() {
    let g = gen("f8");
    let base = misra_gries(&g);
    assert!(hamiltonian_complement_colouring(&g, 0, &[1, 2, 3], &base).is_err());
    let w = g.neighbours(0).next().unwrap();
    assert!(hamiltonian_complement_colouring(&g, w, &[], &base).is_err());
}

/// The construction is always proper, but neither rainbow connectivity nor
/// the colour bound is guaranteed: a triangle needs three fresh colours, not
/// two, and some outputs are not rainbow connected. The value bound itself
/// holds on every instance.
#[test]
fn hamiltonian_complement_outcomes_on_seven_vertices() {
    let cfg = SearchConfig::default();
    let (mut applicable, mut rainbow, mut over_bound) = (0, 0, 0);
    for g in connected_catalogue(7) {
        let Some((w, cycle)) = hamiltonian_complement_witness(&g) else {
            continue;
        };
        applicable += 1;
        let chi = chromatic_index(&g, &cfg).unwrap();
        let c = hamiltonian_complement_colouring(&g, w, &cycle, &chi.certificate).unwrap();
        assert!(naive_proper(&g, c.colours()));
        let fresh = if cycle.len() == 3 {
            3
        } else {
            cycle.len().div_ceil(2)
        };
        assert_eq!(c.palette() as usize, chi.value + fresh);
        if 2 * c.palette() as usize > g.order() + g.max_degree() + 2 {
            assert_eq!(cycle.len(), 3);
            over_bound += 1;
        }
        if naive_rainbow(&g, c.colours()) {
            rainbow += 1;
        }
        let bound = (g.order() + g.max_degree()) / 2 + 1;
        assert_eq!(
            decide_prc_at_k(&g, bound, &cfg).unwrap().answer(),
            Some(true)
        );
    }
    println!("hamiltonian complement on n = 7: {applicable} applicable, {rainbow} rainbow connected, {over_bound} above the colour bound");
    assert!(applicable > 0 && rainbow < applicable);
    assert!(hamiltonian_cycle(&gen("petersen")).is_none());
}
