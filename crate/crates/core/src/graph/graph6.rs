//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::Graph;
use crate::error::{Graph6Error, Result};

const BIAS: u8 = 63;
const MAX_ORDER: usize = 68_719_476_735;

fn data_byte(position: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::CharOutOfRange { position, byte })
    }
}

/// Decodes one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader("empty input").into());
    }
    let (n, header_len) = decode_order(bytes)?;
    let body = &bytes[header_len..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBitstream {
            expected,
            found: body.len(),
        }
        .into());
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData(body.len() - expected).into());
    }
    let mut values = Vec::with_capacity(expected);
    for (i, &b) in body.iter().enumerate() {
        values.push(data_byte(header_len + i, b)?);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = values[k / 6];
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding.into());
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = data_byte(0, bytes[0])?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let take = |count: usize, offset: usize| -> Result<usize, Graph6Error> {
        if bytes.len() < offset + count {
            return Err(Graph6Error::MalformedHeader("size header cut short"));
        }
        let mut n = 0usize;
        for i in 0..count {
            n = (n << 6) | data_byte(offset + i, bytes[offset + i])? as usize;
        }
        Ok(n)
    };
    if bytes.len() >= 2 && bytes[1] == 126 {
        Ok((take(6, 2)?, 8))
    } else {
        Ok((take(3, 1)?, 4))
    }
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n).into());
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::FamilySpec;

    #[test]
    fn single_vertex() {
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(parse_graph6(b"@").unwrap().order(), 1);
    }

    #[test]
    fn known_codes() {
        // K_4 is "C~", P_3 (0-1-2) is "Bg".
        let k4 = "complete:4"
            .parse::<FamilySpec>()
            .unwrap()
            .generate()
            .unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");
        let p3 = parse_graph6(b"Bg").unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)][..]);
    }

    #[test]
    fn large_order_header() {
        let g = "path:70".parse::<FamilySpec>().unwrap().generate().unwrap();
        let code = write_graph6(&g).unwrap();
        assert!(code.starts_with('~'));
        assert_eq!(parse_graph6(code.as_bytes()).unwrap(), g);
    }

    #[test]
    fn error_paths_are_distinct() {
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(Error::Graph6(Graph6Error::TruncatedBitstream { .. }))
        ));
        assert!(parse_graph6(b"D?")
            .unwrap_err()
            .to_string()
            .contains("truncated bitstream"));
        assert!(matches!(
            parse_graph6(b"D?\x7f"),
            Err(Error::Graph6(Graph6Error::CharOutOfRange { .. }))
        ));
        assert!(matches!(
            parse_graph6(b"~?"),
            Err(Error::Graph6(Graph6Error::MalformedHeader(_)))
        ));
        assert!(matches!(
            parse_graph6(b"D?{?"),
            Err(Error::Graph6(Graph6Error::TrailingData(1)))
        ));
    }
}
