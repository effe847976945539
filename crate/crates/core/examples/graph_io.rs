//! Build graphs from family specs, and move them through graph6 and edge lists.
//!
//! cargo run --example graph_io

use prclab::graph::{
    cartesian_product, is_isomorphic, parse_edge_list, parse_graph6, write_edge_list, write_graph6,
};
use prclab::{FamilySpec, GraphMetrics};

fn main() -> prclab::Result<()> {
    for text in [
        "wheel:5",
        "complete_bipartite:2,3",
        "g_kt:2,2",
        "f8",
        "petersen",
    ] {
        let spec: FamilySpec = text.parse()?;
        let g = spec.generate()?;
        let m = GraphMetrics::compute_with_clique_limit(&g, 64)?;
        println!(
            "{text:<24} n={:<3} m={:<3} Δ={} δ={} diam={:?} ω={}  graph6={}",
            m.order,
            m.size,
            m.max_degree,
            m.min_degree,
            m.diameter,
            m.clique_number,
            write_graph6(&g)?
        );
    }

    // Ranges expand to every member.
    let cycles = FamilySpec::expand_grid("cycle:4..7")?;
    println!(
        "cycle:4..7 -> {}",
        cycles
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    // Round trips.
    let g = "petersen".parse::<FamilySpec>()?.generate()?;
    let back = parse_graph6(write_graph6(&g)?.as_bytes())?;
    assert_eq!(g, back);
    let parsed = parse_edge_list(&write_edge_list(&g))?;
    assert_eq!(parsed.graph, g);

    // K2 □ K3 is the triangular prism.
    let k2 = "complete:2".parse::<FamilySpec>()?.generate()?;
    let k3 = "complete:3".parse::<FamilySpec>()?.generate()?;
    let prism = cartesian_product(&k2, &k3)?;
    let spec_prism = "clique_product:2,3".parse::<FamilySpec>()?.generate()?;
    println!(
        "K2□K3 matches clique_product:2,3: {}",
        is_isomorphic(&prism, &spec_prism)
    );

    // Malformed graph6 is rejected with a specific error.
    match parse_graph6(b"D?") {
        Ok(_) => unreachable!(),
        Err(e) => println!("parse_graph6(\"D?\"): {e}"),
    }
    Ok(())
}
