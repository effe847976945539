//! Plain edge lists: one `u v` pair of 0-based ids per line, `#` comments.
//!
//! The first line is read as an `n m` header when it holds two integers and
//! exactly `m` edge lines follow it. Without a header the order is one more
//! than the largest id seen.

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListParse {
    pub graph: Graph,
    /// Repeated edges that were collapsed (`u v` and `v u` count as the same edge).
    pub duplicates: usize,
}

impl EdgeListParse {
    pub fn had_duplicates(&self) -> bool {
        self.duplicates > 0
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListParse> {
    let mut rows: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeList {
                line: i + 1,
                message: format!("expected two integers, found `{line}`"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::EdgeList {
                line: i + 1,
                message: format!("`{s}` is not a vertex id"),
            })
        };
        rows.push((i + 1, parse(fields[0])?, parse(fields[1])?));
    }

    let header = match rows.first() {
        Some(&(_, n, m)) if rows.len() - 1 == m => Some(n),
        _ => None,
    };
    let body = if header.is_some() {
        &rows[1..]
    } else {
        &rows[..]
    };

    let mut pairs = Vec::with_capacity(body.len());
    let mut max_id = None;
    for &(line, u, v) in body {
        if u == v {
            return Err(Error::EdgeList {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if let Some(n) = header {
            if u >= n || v >= n {
                return Err(Error::EdgeList {
                    line,
                    message: format!("vertex id {} >= n = {n}", u.max(v)),
                });
            }
        }
        max_id = max_id.max(Some(u.max(v)));
        pairs.push((u.min(v), u.max(v)));
    }
    let before = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    let n = header.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Ok(EdgeListParse {
        duplicates: before - pairs.len(),
        graph: Graph::from_edges(n, pairs)?,
    })
}

/// Writes the `n m` header followed by the edges in canonical order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn header_and_path() {
        let p = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(
            p.graph,
            "path:3".parse::<FamilySpec>().unwrap().generate().unwrap()
        );
        assert!(!p.had_duplicates());
    }

    #[test]
    fn self_loop_is_an_error() {
        let err = parse_edge_list("0 1\n0 0\n").unwrap_err().to_string();
        assert!(err.contains("self-loop"), "{err}");
    }

    #[test]
    fn duplicates_collapse_with_flag() {
        let p = parse_edge_list("0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(p.graph.size(), 2);
        assert_eq!(p.duplicates, 1);
    }

    #[test]
    fn id_out_of_range_with_header() {
        let err = parse_edge_list("2 1\n0 2\n").unwrap_err().to_string();
        assert!(err.contains(">= n = 2"), "{err}");
    }

    #[test]
    fn writer_round_trips() {
        let g = "petersen"
            .parse::<FamilySpec>()
            .unwrap()
            .generate()
            .unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap().graph, g);
    }
}
