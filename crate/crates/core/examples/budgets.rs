//! Decision queries at a fixed palette, and what a solve reports when it
//! runs out of budget.
//!
//! cargo run --release --example budgets

use prclab::solver::{decide_at_k, solve, Determinism, Parameter};
use prclab::{FamilySpec, SearchConfig};

fn main() -> prclab::Result<()> {
    let g = "petersen".parse::<FamilySpec>()?.generate()?;
    let cfg = SearchConfig::default();
    for k in 2..=5 {
        let d = decide_at_k(&g, Parameter::Rc, k, &cfg)?;
        println!("Petersen rainbow {k}-colouring: {:?}", d.answer());
    }

    let tight = SearchConfig {
        node_budget: 50,
        ..SearchConfig::default()
    };
    let g = "cycle:11".parse::<FamilySpec>()?.generate()?;
    let r = solve(&g, Parameter::Prc, &tight)?;
    let (lo, hi) = r.bracket();
    println!(
        "C11 with 50 nodes: exact={} bracket [{lo}, {hi}] after {} nodes",
        r.exact, r.stats.nodes
    );
    for level in &r.stats.levels {
        println!("  k={} {:?}", level.k, level.status);
    }

    let parallel = SearchConfig {
        determinism: Determinism::ParallelValueOnly,
        ..SearchConfig::default()
    };
    let g = "f_n:8".parse::<FamilySpec>()?.generate()?;
    let r = solve(&g, Parameter::Prc, &parallel)?;
    println!(
        "prc(F_8) in parallel mode: {} in {:.2}s",
        r.value, r.stats.elapsed_secs
    );
    Ok(())
}
