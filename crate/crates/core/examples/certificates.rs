//! Every solve returns a colouring that can be checked independently.
//!
//! cargo run --release --example certificates

use prclab::colouring::{rainbow_path, Certificate};
use prclab::solver::{decide_prc_at_k, solve, Parameter};
use prclab::{verify, FamilySpec, SearchConfig};

fn main() -> prclab::Result<()> {
    let g = "wheel:6".parse::<FamilySpec>()?.generate()?;
    let cfg = SearchConfig::default();
    let r = solve(&g, Parameter::Prc, &cfg)?;
    println!(
        "prc(W6) = {} (exact: {}, {} nodes)",
        r.value, r.exact, r.stats.nodes
    );

    let report = verify(&g, &r.certificate)?;
    println!(
        "proper: {}, rainbow connected: {}",
        report.is_proper, report.is_rainbow_connected
    );

    // Certificates round-trip through JSON.
    let json = r.certificate.to_certificate(&g).to_json();
    println!("certificate: {json}");
    let c = Certificate::from_json(&json)?.to_colouring(&g)?;
    if let Some(path) = rainbow_path(&g, &c, 1, 4)? {
        println!("rainbow path 1 -> 4: {path:?}");
    }

    // One colour fewer is impossible.
    let below = decide_prc_at_k(&g, r.value - 1, &cfg)?;
    println!(
        "a proper rainbow {}-colouring exists: {:?}",
        r.value - 1,
        below.answer()
    );

    // Break properness and the checker names the clash.
    let mut bad = c.clone();
    bad.set(1, c.colour(0))?;
    let report = verify(&g, &bad)?;
    println!(
        "tampered: proper={} clash={:?}",
        report.is_proper, report.proper_violation
    );
    Ok(())
}
