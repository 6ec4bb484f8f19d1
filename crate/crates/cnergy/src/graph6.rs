//! graph6 format: 6 adjacency bits per printable byte.
//!
//! The header is `n + 63` for `n <= 62`, or `~` followed by three bytes
//! carrying 18 bits for `n <= 258047`. The 8-byte header form (`~~`) is
//! rejected. Body bytes encode the upper triangle column by column —
//! x(0,1), x(0,2), x(1,2), x(0,3), ... — most significant bit first, zero
//! padded to a byte boundary.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_LONG_N: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the printable range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("truncated body: need {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("unexpected {extra} trailing byte(s)")]
    TrailingBytes { extra: usize },
    #[error("8-byte vertex-count header is not supported")]
    UnsupportedHeader,
}

/// Decodes one graph6-encoded line (trailing whitespace ignored).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { pos, byte: b });
        }
    }

    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedHeader);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, got: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET));
        (n, &bytes[4..])
    } else {
        (usize::from(bytes[0] - OFFSET), &bytes[1..])
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, got: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes { extra: body.len() - expected });
    }

    let mut edges = Vec::new();
    let mut idx = 0usize;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = body[idx / 6] - OFFSET;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((row, col));
            }
            idx += 1;
            if idx == bit_count {
                break 'outer;
            }
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range"))
}

/// Encodes a graph as a graph6 string.
///
/// # Panics
/// Panics when the vertex count exceeds the 4-byte header limit of 258047.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= MAX_LONG_N, "graph6 encoding supports at most {MAX_LONG_N} vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("all bytes printable")
}
