//! Explicit colourings: the spanning-star bound, the Hamiltonian-complement
//! bound, cycles, wheels, the clique bound for rc and the G_{k,t} rc colouring.
//!
//! cargo run --release --example constructions

use prclab::bounds::hamiltonian_complement_witness;
use prclab::constructions::{
    clique_rc_colouring, cycle_colouring, gkt_colouring, hamiltonian_complement_colouring,
    spanning_star_colouring, wheel_colouring,
};
use prclab::graph::{connected_catalogue, maximum_clique, write_graph6};
use prclab::solver::chromatic_index;
use prclab::{verify, EdgeColouring, FamilySpec, Graph, SearchConfig};

fn show(name: &str, g: &Graph, c: &EdgeColouring) -> prclab::Result<()> {
    let r = verify(g, c)?;
    println!(
        "{name:<28} n={:<3} colours={:<3} proper={:<5} rainbow={}",
        g.order(),
        c.palette(),
        r.is_proper,
        r.is_rainbow_connected
    );
    Ok(())
}

fn main() -> prclab::Result<()> {
    let cfg = SearchConfig::default();

    let petersen = "petersen".parse::<FamilySpec>()?.generate()?;
    show(
        "spanning star, Petersen",
        &petersen,
        &spanning_star_colouring(&petersen, &cfg)?,
    )?;

    // The first 7-vertex graph where G − N[w] is Hamiltonian for a vertex w of
    // maximum degree. The result is proper but need not be rainbow connected.
    let found = connected_catalogue(7)
        .into_iter()
        .find_map(|g| hamiltonian_complement_witness(&g).map(|wc| (g, wc)));
    if let Some((g, (w, cycle))) = found {
        let base = chromatic_index(&g, &cfg)?.certificate;
        let name = format!("hamiltonian complement {}", write_graph6(&g)?);
        show(
            &name,
            &g,
            &hamiltonian_complement_colouring(&g, w, &cycle, &base)?,
        )?;
    }

    for n in [4, 7, 10] {
        let (g, c) = cycle_colouring(n)?;
        show(&format!("cycle C{n}"), &g, &c)?;
    }
    for n in [4, 6, 9] {
        let (g, c) = wheel_colouring(n)?;
        show(&format!("wheel W{n}"), &g, &c)?;
    }

    // K5 with a pendant vertex: rc ≤ n + 1 − ω = 2.
    let g = Graph::from_edges(
        6,
        (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .chain([(4, 5)]),
    )?;
    show(
        "clique bound, K5 + pendant",
        &g,
        &clique_rc_colouring(&g, &maximum_clique(&g))?,
    )?;

    for (k, t) in [(2, 2), (3, 2), (3, 3)] {
        let (g, c) = gkt_colouring(k, t)?;
        show(&format!("G_(k={k},t={t}) rc colouring"), &g, &c)?;
    }
    Ok(())
}
