//! Edge colourings as certificates, and the two predicates everything else
//! is checked against: properness and rainbow connectivity.

mod proper;
mod rainbow;
mod verify;

pub use proper::{is_proper, ProperCheck};
pub use rainbow::{
    is_rainbow_connected, is_rainbow_connected_with, rainbow_path, rainbow_path_with, PairWitness,
    RainbowCheck, RainbowDecider, RainbowOptions, RainbowWitness, DEFAULT_COLOUR_CAP,
};
pub use verify::{verify, verify_with, VerifyReport};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Total assignment of colours `1..=k` to the edges of a graph, indexed by
/// canonical edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColouring {
    colours: Vec<u32>,
    k: u32,
}

impl EdgeColouring {
    pub fn new(colours: Vec<u32>, k: u32) -> Result<Self> {
        if let Some((edge, &colour)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColourOutOfRange { edge, colour, k });
        }
        Ok(EdgeColouring { colours, k })
    }

    /// Palette sized to the largest colour present.
    pub fn from_colours(colours: Vec<u32>) -> Result<Self> {
        let k = colours.iter().copied().max().unwrap_or(0);
        Self::new(colours, k)
    }

    /// Every edge colour 1.
    pub fn monochromatic(m: usize) -> Self {
        EdgeColouring {
            colours: vec![1; m],
            k: u32::from(m > 0),
        }
    }

    /// Edge `i` gets colour `i + 1`.
    pub fn all_distinct(m: usize) -> Self {
        EdgeColouring {
            colours: (1..=m as u32).collect(),
            k: m as u32,
        }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colours(&self) -> &[u32] {
        &self.colours
    }

    pub fn colour(&self, edge: usize) -> u32 {
        self.colours[edge]
    }

    /// Declared palette size.
    pub fn palette(&self) -> u32 {
        self.k
    }

    pub fn colours_used(&self) -> usize {
        self.colours.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn set(&mut self, edge: usize, colour: u32) -> Result<()> {
        if colour == 0 || colour > self.k {
            return Err(Error::ColourOutOfRange {
                edge,
                colour,
                k: self.k,
            });
        }
        self.colours[edge] = colour;
        Ok(())
    }

    /// Widens (or narrows, if still valid) the declared palette.
    pub fn with_palette(self, k: u32) -> Result<Self> {
        Self::new(self.colours, k)
    }

    /// Gives `edge` the colour `k + 1` and grows the palette by one.
    pub fn recolour_fresh(&mut self, edge: usize) -> u32 {
        self.k += 1;
        self.colours[edge] = self.k;
        self.k
    }

    /// Renames colours so they appear as `1, 2, …` in edge order and shrinks
    /// the palette to the number of colours used.
    pub fn normalized(&self) -> EdgeColouring {
        let mut map = std::collections::HashMap::new();
        let colours: Vec<u32> = self
            .colours
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        EdgeColouring {
            k: map.len() as u32,
            colours,
        }
    }

    pub(crate) fn check_size(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.size() {
            return Err(Error::SizeMismatch {
                expected: g.size(),
                got: self.colours.len(),
            });
        }
        Ok(())
    }

    /// Builds a colouring from `(u, v, colour)` triples covering every edge of `g` once.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, u32)], k: u32) -> Result<Self> {
        let mut colours = vec![0u32; g.size()];
        for &(u, v, c) in triples {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| Error::Certificate(format!("edge {u}-{v} is not in the graph")))?;
            if colours[e] != 0 {
                return Err(Error::Certificate(format!("edge {u}-{v} listed twice")));
            }
            if c == 0 {
                return Err(Error::Certificate(format!("edge {u}-{v} has colour 0")));
            }
            colours[e] = c;
        }
        if let Some(e) = colours.iter().position(|&c| c == 0) {
            let (u, v) = g.edge(e);
            return Err(Error::Certificate(format!("edge {u}-{v} has no colour")));
        }
        Self::new(colours, k)
    }

    pub fn to_certificate(&self, g: &Graph) -> Certificate {
        Certificate {
            n: g.order(),
            edges: g
                .edges()
                .iter()
                .zip(&self.colours)
                .map(|(&(u, v), &c)| (u, v, c))
                .collect(),
            k: self.k,
        }
    }
}

/// Certificate file: `{"n": 5, "edges": [[u, v, colour], ...], "k": 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<(usize, usize, u32)>,
    pub k: u32,
}

impl Certificate {
    /// Checks the certificate against `g` and converts it to an [`EdgeColouring`].
    pub fn to_colouring(&self, g: &Graph) -> Result<EdgeColouring> {
        if self.n != g.order() {
            return Err(Error::Certificate(format!(
                "certificate is for n = {}, graph has n = {}",
                self.n,
                g.order()
            )));
        }
        if self.edges.len() != g.size() {
            return Err(Error::Certificate(format!(
                "certificate lists {} edges, graph has {}",
                self.edges.len(),
                g.size()
            )));
        }
        EdgeColouring::from_triples(g, &self.edges, self.k)
    }

    /// The graph spanned by the certificate's edges.
    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v, _)| (u, v)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
