//! Standard graph6 ASCII encoding, restricted to the n ≤ 62 short form
//! (and our 32-vertex cap). Bit-exact with the nauty format description.

use crate::graph::{SimpleGraph, MAX_VERTICES};
use crate::{Error, Result};

/// Encodes a graph as a graph6 string.
pub fn encode_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((63 + acc) as char);
    }
    out
}

/// Decodes a graph6 string. Accepts an optional `>>graph6<<` header.
pub fn decode_graph6(text: &str) -> Result<SimpleGraph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!(
                "graph6 byte {b} out of range in `{text}`"
            )));
        }
    }
    if bytes[0] == 126 {
        // long-form sizes start at n = 63
        return Err(Error::TooManyVertices {
            requested: 63,
            max: MAX_VERTICES,
        });
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            requested: n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    if bytes.len() != 1 + expect {
        return Err(Error::Parse(format!(
            "graph6 string for n={n} should have {} bytes, got {}",
            1 + expect,
            bytes.len()
        )));
    }
    let mut g = SimpleGraph::edgeless(n)?;
    let mut idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if !nbits.is_multiple_of(6) {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse(format!("nonzero padding bits in `{text}`")));
        }
    }
    Ok(g)
}
