//! graph6 codec for simple graphs (printable-ASCII encoding, bytes
//! offset by 63, upper-triangle bits in column order). Decoded edges get
//! ids in row-major adjacency order.

use thiserror::Error;

use crate::multigraph::MultiGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("invalid byte {byte:#x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("line too short: expected {expected} data bytes, found {found}")]
    TooShort { expected: usize, found: usize },
    #[error("trailing bytes after encoding")]
    TrailingBytes,
    #[error("graph order {0} not supported")]
    UnsupportedOrder(u64),
    #[error("multigraphs cannot be encoded as graph6")]
    NotSimple,
}

/// Decode one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn decode(line: &str) -> Result<MultiGraph, Graph6Error> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let check = |pos: usize| -> Result<u64, Graph6Error> {
        let byte = bytes[pos];
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { pos, byte });
        }
        Ok((byte - 63) as u64)
    };
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Graph6Error::UnsupportedOrder(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TooShort {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (check(1)? << 12) | (check(2)? << 6) | check(3)?;
        (n, 4)
    } else {
        (check(0)?, 1)
    };
    if n > 512 {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let n = n as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::TooShort {
            expected: nbytes,
            found: bytes.len() - pos,
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingBytes);
    }
    let mut adj = vec![false; n * n];
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let val = check(pos + bit_index / 6)?;
            let bit = (val >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                adj[u * n + v] = true;
            }
            bit_index += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u * n + v] {
                edges.push((u, v));
            }
        }
    }
    Ok(MultiGraph::new(n, edges).expect("decoded graph is loopless by construction"))
}

/// Encode a simple graph as one graph6 line (no trailing newline).
pub fn encode(g: &MultiGraph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::NotSimple);
    }
    let n = g.n();
    if n > 512 {
        return Err(Graph6Error::UnsupportedOrder(n as u64));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        let (a, b) = (u.min(v), u.max(v));
        adj[a * n + b] = true;
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | adj[u * n + v] as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}
