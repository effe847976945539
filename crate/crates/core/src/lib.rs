//! Exact computation of the proper rainbow connection number `prc(G)`, the
//! rainbow connection number `rc(G)` and the chromatic index `χ′(G)` on small
//! graphs, with verifiable edge-colouring certificates.

pub mod bounds;
pub mod colouring;
pub mod config;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod random;
pub mod solver;
pub mod sweep;

pub use colouring::{verify, Certificate, EdgeColouring, VerifyReport};
pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph, GraphMetrics};
pub use solver::{Parameter, SearchConfig, SolveResult};
