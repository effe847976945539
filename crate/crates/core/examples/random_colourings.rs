//! Random proper colourings of graphs whose structure forces rainbow
//! connectivity: diameter two, and minimum degree at least half the order.
//!
//! cargo run --release --example random_colourings -- [seed]

use prclab::colouring::is_rainbow_connected;
use prclab::random::{
    diameter_two_graph, min_degree_graph, proper_colouring, rng_from_seed, DEFAULT_SEED,
};
use rand::Rng;

fn main() -> prclab::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    let mut rng = rng_from_seed(seed);
    let mut checked = 0;
    let mut failures = 0;
    for _ in 0..50 {
        let n = rng.gen_range(4..=10);
        let g = diameter_two_graph(&mut rng, n);
        for _ in 0..5 {
            let extra = rng.gen_range(0..3);
            let c = proper_colouring(&mut rng, &g, extra);
            checked += 1;
            failures += usize::from(!is_rainbow_connected(&g, &c)?.connected);
        }
    }
    println!("diameter two: {checked} proper colourings, {failures} not rainbow connected");

    let (mut checked, mut failures) = (0, 0);
    for _ in 0..30 {
        let n = rng.gen_range(9..=12);
        let g = min_degree_graph(&mut rng, n, n / 2);
        for _ in 0..3 {
            let c = proper_colouring(&mut rng, &g, 0);
            checked += 1;
            failures += usize::from(!is_rainbow_connected(&g, &c)?.connected);
        }
    }
    println!("min degree ≥ n/2: {checked} proper colourings, {failures} not rainbow connected (seed {seed})");
    Ok(())
}
