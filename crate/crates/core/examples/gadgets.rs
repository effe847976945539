//! The small graphs that show where the bounds are tight or fail.
//!
//! cargo run --release --example gadgets

use prclab::constructions::{f8_colouring, g11_colouring, g6_colouring, F8Colouring};
use prclab::solver::{solve, Parameter};
use prclab::{verify, FamilySpec, SearchConfig};

fn main() -> prclab::Result<()> {
    let cfg = SearchConfig::default();
    println!(
        "{:<10} {:>3} {:>4} {:>3} {:>3} {:>4}",
        "graph", "n", "χ′", "rc", "prc", "diam"
    );
    for name in [
        "z2", "f8", "path:4", "g6_1", "g6_2", "g6_3", "g_11", "f_n:6", "f_n:8",
    ] {
        let spec: FamilySpec = name.parse()?;
        let g = spec.generate()?;
        let v = |p| solve(&g, p, &cfg).map(|r| r.value);
        println!(
            "{name:<10} {:>3} {:>4} {:>3} {:>3} {:>4}",
            g.order(),
            v(Parameter::ChiPrime)?,
            v(Parameter::Rc)?,
            v(Parameter::Prc)?,
            prclab::graph::diameter(&g).unwrap_or(0)
        );
    }

    println!();
    let (g, c) = g11_colouring();
    let r = verify(&g, &c)?;
    println!(
        "G_(1,1) colouring: {} colours, proper rainbow: {}",
        c.palette(),
        r.is_prc_certificate
    );
    for which in [
        F8Colouring::Proper3,
        F8Colouring::ProperRainbow4,
        F8Colouring::Rainbow3,
    ] {
        let (g, c) = f8_colouring(which);
        let r = verify(&g, &c)?;
        println!(
            "F8 {which:?}: proper {}, rainbow {}",
            r.is_proper, r.is_rainbow_connected
        );
    }
    for i in 1..=3 {
        let (g, c) = g6_colouring(i)?;
        let r = verify(&g, &c)?;
        println!(
            "G6.{i}: {} colours, proper {}, rainbow {}",
            c.palette(),
            r.is_proper,
            r.is_rainbow_connected
        );
    }
    Ok(())
}
