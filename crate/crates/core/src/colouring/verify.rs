use super::{is_proper, is_rainbow_connected_with, EdgeColouring, RainbowOptions, RainbowWitness};
use crate::error::Result;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Everything a certificate claims, re-derived from the graph and colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub is_proper: bool,
    /// First clashing pair of edges, as vertex pairs.
    pub proper_violation: Option<((usize, usize), (usize, usize))>,
    pub is_rainbow_connected: bool,
    pub unwitnessed_pair: Option<(usize, usize)>,
    pub is_prc_certificate: bool,
    pub colours_used: usize,
    pub palette: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<RainbowWitness>,
}

pub fn verify(g: &Graph, c: &EdgeColouring) -> Result<VerifyReport> {
    verify_with(g, c, &RainbowOptions::default())
}

pub fn verify_with(g: &Graph, c: &EdgeColouring, opts: &RainbowOptions) -> Result<VerifyReport> {
    let proper = is_proper(g, c)?;
    let rainbow = is_rainbow_connected_with(g, c, opts)?;
    Ok(VerifyReport {
        is_proper: proper.proper,
        proper_violation: proper.conflict.map(|(a, b)| (g.edge(a), g.edge(b))),
        is_rainbow_connected: rainbow.connected,
        unwitnessed_pair: rainbow.first_unwitnessed,
        is_prc_certificate: proper.proper && rainbow.connected,
        colours_used: c.colours_used(),
        palette: c.palette(),
        witness: rainbow.witness,
    })
}
