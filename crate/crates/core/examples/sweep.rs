//! Sweep the connected graphs on up to five vertices, cross-check with the
//! brute-force oracle, and show that an interrupted run resumes to the same summary.
//!
//! cargo run --release --example sweep

use prclab::sweep::{run_sweep, run_sweep_partial, SweepJob, SweepSource};

fn main() -> prclab::Result<()> {
    let out = std::env::temp_dir().join("prclab-sweep-example");
    let source = SweepSource::Catalogue {
        min_order: 2,
        max_order: 5,
    };
    let mut job = SweepJob::new(source, &out);
    job.oracle = true;
    let full = run_sweep(&job)?;
    println!(
        "{} graphs, {} oracle checks, {} violations, {:.2}s",
        full.processed,
        full.oracle_checks,
        full.violations.len(),
        full.wall_secs
    );
    for v in &full.violations {
        println!(
            "  {} violates {:?}; replay: {}",
            v.graph6, v.claims, v.reproduce
        );
    }
    for (id, c) in full.claims.iter().filter(|(_, c)| c.pass + c.fail > 0) {
        println!(
            "  {id:<36} pass {:>3} fail {:>2} n/a {:>3}",
            c.pass, c.fail, c.na
        );
    }

    // Stop after ten graphs, then resume.
    run_sweep_partial(&job, 10)?;
    job.resume = true;
    let resumed = run_sweep(&job)?;
    println!("resumed summary identical: {}", resumed.same_outcome(&full));
    println!("outputs: {}", out.display());
    Ok(())
}
