//! Exact prc, rc and χ′ over the standard families.
//!
//! cargo run --release --example family_values

use prclab::solver::{solve, Parameter};
use prclab::{FamilySpec, SearchConfig};

fn main() -> prclab::Result<()> {
    let cfg = SearchConfig::default();
    let grids = [
        "complete:2..6",
        "cycle:4..10",
        "wheel:4..6",
        "complete_bipartite:2..4,2..4",
        "clique_product:2,2..3",
        "path:2..5",
    ];
    println!(
        "{:<26} {:>3} {:>3} {:>4} {:>3} {:>3}",
        "graph", "n", "m", "χ′", "rc", "prc"
    );
    for grid in grids {
        for spec in FamilySpec::expand_grid(grid)? {
            let g = spec.generate()?;
            let value = |p| {
                solve(&g, p, &cfg).map(|r| {
                    if r.exact {
                        r.value.to_string()
                    } else {
                        format!("≤{}", r.value)
                    }
                })
            };
            println!(
                "{:<26} {:>3} {:>3} {:>4} {:>3} {:>3}",
                spec.to_string(),
                g.order(),
                g.size(),
                value(Parameter::ChiPrime)?,
                value(Parameter::Rc)?,
                value(Parameter::Prc)?
            );
        }
    }
    Ok(())
}
