//! Judge every claim on one graph and list which sufficient conditions fire.
//!
//! cargo run --release --example bounds_report -- [family-spec]

use prclab::bounds::{classify_extremal, evaluate_bounds, sufficient_conditions, Solved};
use prclab::solver::{solve, Parameter};
use prclab::{FamilySpec, SearchConfig};

fn main() -> prclab::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "complete_bipartite:3,4".into());
    let spec: FamilySpec = text.parse()?;
    let g = spec.generate()?;
    let cfg = SearchConfig::default();
    let exact = |p| solve(&g, p, &cfg).map(|r| r.exact.then_some(r.value));
    let solved = Solved {
        chi_prime: exact(Parameter::ChiPrime)?,
        rc: exact(Parameter::Rc)?,
        prc: exact(Parameter::Prc)?,
    };
    println!(
        "{text}: χ′={:?} rc={:?} prc={:?}",
        solved.chi_prime, solved.rc, solved.prc
    );

    let report = evaluate_bounds(&g, &solved, Some(&spec))?;
    for (id, c) in report.claims.iter().filter(|(_, c)| c.applicable) {
        let verdict = match c.satisfied {
            Some(true) => "holds",
            Some(false) => "VIOLATED",
            None => "unknown",
        };
        println!("  {id:<36} {verdict:<9} {}", c.details);
    }
    let na = report.claims.values().filter(|c| !c.applicable).count();
    println!("  ({na} claims not applicable)");

    let ext = classify_extremal(&g, solved.prc)?;
    println!("extremal class: {:?} ({})", ext.predicted, ext.reason);
    for rule in sufficient_conditions(&g, solved.rc)? {
        println!("fires: {} -> {:?}", rule.rule, rule.conclusion);
    }
    Ok(())
}
