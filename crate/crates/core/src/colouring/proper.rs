use super::EdgeColouring;
use crate::error::Result;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperCheck {
    pub proper: bool,
    /// Two edge indices sharing a vertex and a colour, smaller index first.
    pub conflict: Option<(usize, usize)>,
}

/// Scans vertices in id order and reports the first clash found there.
pub fn is_proper(g: &Graph, c: &EdgeColouring) -> Result<ProperCheck> {
    c.check_size(g)?;
    for v in 0..g.order() {
        let inc = g.incident(v);
        for (i, &(_, e1)) in inc.iter().enumerate() {
            for &(_, e2) in &inc[i + 1..] {
                if c.colour(e1) == c.colour(e2) {
                    return Ok(ProperCheck {
                        proper: false,
                        conflict: Some((e1.min(e2), e1.max(e2))),
                    });
                }
            }
        }
    }
    Ok(ProperCheck {
        proper: true,
        conflict: None,
    })
}
