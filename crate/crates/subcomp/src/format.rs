//! graph6 and edge-list text formats.
//!
//! graph6 is the canonical interchange format (compact, standard in graph
//! enumeration tooling); the edge-list form is for hand-written inputs:
//! a header line `n m`, then `m` lines `u v` with 0-indexed endpoints.
//! `#` starts a comment anywhere on a line.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 byte {byte:#x} at position {pos} outside the printable range")]
    BadByte { byte: u8, pos: usize },
    #[error("graph6 string has {got} adjacency bytes, expected {expected}")]
    BadLength { got: usize, expected: usize },
    #[error("graph6 vertex count {0} not supported")]
    UnsupportedSize(u64),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const G6_BIAS: u8 = 63;
/// Largest vertex count the 4-byte graph6 header can carry.
const G6_MAX_N: u64 = 258_047;

/// Encode in graph6. Uses the short header for `n <= 62` and the 4-byte
/// header up to 258047, which is far beyond anything this toolkit targets.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(G6_BIAS + n as u8);
    } else {
        assert!((n as u64) <= G6_MAX_N, "graph too large for graph6 encoding");
        out.push(126);
        out.push(G6_BIAS + ((n >> 12) & 0x3f) as u8);
        out.push(G6_BIAS + ((n >> 6) & 0x3f) as u8);
        out.push(G6_BIAS + (n & 0x3f) as u8);
    }
    // upper-triangle bits, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(G6_BIAS + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(G6_BIAS + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// Decode a graph6 string. A leading `>>graph6<<` header is tolerated.
pub fn decode_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(G6_BIAS..=126).contains(&b) {
            return Err(FormatError::BadByte { byte: b, pos });
        }
    }
    let (n, mut idx): (u64, usize) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte header for n > 258047; out of scope for this tool
            return Err(FormatError::UnsupportedSize(u64::MAX));
        }
        if bytes.len() < 4 {
            return Err(FormatError::BadLength {
                got: bytes.len(),
                expected: 4,
            });
        }
        let n = ((bytes[1] - G6_BIAS) as u64) << 12
            | ((bytes[2] - G6_BIAS) as u64) << 6
            | (bytes[3] - G6_BIAS) as u64;
        (n, 4)
    } else {
        ((bytes[0] - G6_BIAS) as u64, 1)
    };
    if n > G6_MAX_N {
        return Err(FormatError::UnsupportedSize(n));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - idx != expected {
        return Err(FormatError::BadLength {
            got: bytes.len() - idx,
            expected,
        });
    }
    let mut edges = Vec::new();
    let mut acc = 0u8;
    let mut have = 0;
    for v in 1..n {
        for u in 0..v {
            if have == 0 {
                acc = bytes[idx] - G6_BIAS;
                idx += 1;
                have = 6;
            }
            if acc & 0x20 != 0 {
                edges.push((u, v));
            }
            acc = (acc << 1) & 0x3f;
            have -= 1;
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Parse the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines
        .next()
        .ok_or_else(|| FormatError::EdgeList("missing 'n m' header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| FormatError::EdgeList(format!("bad header line {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| FormatError::EdgeList(format!("bad header line {header:?}")))?;
    if it.next().is_some() {
        return Err(FormatError::EdgeList(format!(
            "trailing tokens on header line {header:?}"
        )));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| FormatError::EdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| FormatError::EdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(FormatError::EdgeList(format!(
                "trailing tokens on edge line {line:?}"
            )));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList(format!(
            "header announced {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::build(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
