//! graph6 encoding and decoding.
//!
//! Bit-exact per McKay's format description: big-endian 6-bit packing of the
//! upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), …, each
//! byte offset by 63. The optional `>>graph6<<` header is tolerated on input
//! and never emitted.

use super::graph::{SimpleGraph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 record.
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(base, "empty record"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + i, format!("byte {b} outside printable range 63..=126")));
        }
    }

    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(malformed(base, "truncated multi-byte order"));
        }
        if bytes[1] == 126 {
            return Err(malformed(base + 1, "8-byte orders exceed the supported range"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(format!("graph6 order {n} exceeds {MAX_VERTICES} vertices")));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        return Err(malformed(
            base + bytes.len().min(pos + nbytes),
            format!("expected {} adjacency bytes, found {}", nbytes, bytes.len() - pos),
        ));
    }

    let mut g = SimpleGraph::empty(n)?;
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[pos + bit / 6];
            let set = (byte - 63) >> (5 - bit % 6) & 1 != 0;
            if set {
                g = g.add_edge(row, col)?;
            }
            bit += 1;
        }
    }
    // Padding bits must be zero for a canonical record.
    while bit < nbytes * 6 {
        let byte = bytes[pos + bit / 6];
        if (byte - 63) >> (5 - bit % 6) & 1 != 0 {
            return Err(malformed(base + pos + bit / 6, "nonzero padding bit"));
        }
        bit += 1;
    }
    pos += nbytes;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Encodes a graph as a graph6 record (no header, no newline).
pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc <<= 1;
            if g.has_edge(row, col) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn decodes_k1_and_k2() {
        // "@" is the single vertex; "A_" is one edge.
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);

        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn decodes_empty_graph_order_zero() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn known_petgraph_fixture() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4 encode as "DQc".
        let g = SimpleGraph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn k5_round_trip_is_vertex_identical() {
        let g = k(5);
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn header_tolerated_on_input_never_emitted() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert!(g.has_edge(0, 1));
        assert!(!write_graph6(&g).contains('>'));
    }

    #[test]
    fn multi_byte_order_round_trips() {
        for n in [63, 64] {
            let mut g = SimpleGraph::empty(n).unwrap();
            for v in 1..n {
                g = g.add_edge(0, v).unwrap();
            }
            let s = write_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_records() {
        // empty
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6 { offset: 0, .. })));
        // byte below 63 at offset 1
        assert!(matches!(
            parse_graph6("A "),
            Err(Error::MalformedGraph6 { offset: 1, .. })
        ));
        // truncated adjacency bytes
        assert!(matches!(parse_graph6("D"), Err(Error::MalformedGraph6 { .. })));
        // trailing garbage
        assert!(matches!(parse_graph6("A__"), Err(Error::MalformedGraph6 { .. })));
        // order beyond the 64-vertex cap
        assert!(matches!(parse_graph6("~?B?"), Err(Error::TooLarge(_))));
    }

    #[test]
    fn rejects_nonzero_padding() {
        // K_2 with a stray low bit in the padding region.
        let bad = String::from_utf8(vec![b'A', 63 + 0b100001]).unwrap();
        assert!(matches!(parse_graph6(&bad), Err(Error::MalformedGraph6 { .. })));
    }
}
