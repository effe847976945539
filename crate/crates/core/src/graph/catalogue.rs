//! All connected graphs on up to seven vertices, one graph6 code per line,
//! as exported from the standard graph atlas.

use super::{parse_graph6, Graph};

pub const CATALOGUE_MAX_ORDER: usize = 7;

const CONNECTED: [&str; CATALOGUE_MAX_ORDER] = [
    include_str!("../../data/connected1.g6"),
    include_str!("../../data/connected2.g6"),
    include_str!("../../data/connected3.g6"),
    include_str!("../../data/connected4.g6"),
    include_str!("../../data/connected5.g6"),
    include_str!("../../data/connected6.g6"),
    include_str!("../../data/connected7.g6"),
];

/// Raw graph6 lines for the connected graphs of order `n`.
pub fn connected_catalogue_codes(n: usize) -> impl Iterator<Item = &'static str> {
    let text = n
        .checked_sub(1)
        .and_then(|i| CONNECTED.get(i))
        .copied()
        .unwrap_or("");
    text.lines().filter(|l| !l.trim().is_empty())
}

/// Connected graphs of order `n` (empty for `n` outside `1..=7`).
pub fn connected_catalogue(n: usize) -> Vec<Graph> {
    connected_catalogue_codes(n)
        .map(|code| parse_graph6(code.as_bytes()).expect("bundled catalogue is valid graph6"))
        .collect()
}
