//! graph6 encoding and decoding (short form, up to 62 vertices).
//!
//! Layout: one header byte holding `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order — pairs (0,1), (0,2), (1,2),
//! (0,3), ... — packed six bits per byte, most significant bit first, each
//! byte offset by 63. Padding bits after the last pair must be zero.

use crate::graph::Graph;
use thiserror::Error;

const OFFSET: u8 = 63;
const MAX_N: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {offset}: missing or malformed graph6 header")]
    MalformedHeader { offset: usize },
    #[error("byte {offset}: body truncated ({found} of {expected} body bytes present)")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: byte {byte:#04x} outside the graph6 alphabet")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: trailing data after the encoded graph")]
    TrailingGarbage { offset: usize },
    #[error("byte {offset}: padding bits are not zero")]
    NonzeroPadding { offset: usize },
    #[error("graph on {n} vertices does not fit the short graph6 form (max {MAX_N})")]
    UnsupportedSize { n: usize },
}

/// Decodes one short-form graph6 string. Errors carry the byte offset of the
/// first offending input byte.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let header = *bytes
        .first()
        .ok_or(Graph6Error::MalformedHeader { offset: 0 })?;
    // '~' starts the multi-byte size forms, which exceed the supported range.
    if !(OFFSET..OFFSET + MAX_N as u8 + 1).contains(&header) {
        return Err(Graph6Error::MalformedHeader { offset: 0 });
    }
    let n = (header - OFFSET) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            offset: 1 + expected,
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6];
            if byte < OFFSET || byte > OFFSET + 63 {
                return Err(Graph6Error::InvalidByte {
                    offset: 1 + bit / 6,
                    byte,
                });
            }
            if (byte - OFFSET) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j).expect("i < j < n");
            }
            bit += 1;
        }
    }
    // validate the alphabet and padding of the final partial byte
    if let Some(&last) = body.last() {
        if last < OFFSET || last > OFFSET + 63 {
            return Err(Graph6Error::InvalidByte {
                offset: expected,
                byte: last,
            });
        }
        let pad = expected * 6 - pairs;
        if pad > 0 && (last - OFFSET) & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
    }
    Ok(g)
}

/// Encodes a graph in short graph6 form; fails for more than 62 vertices.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Graph6Error::UnsupportedSize { n });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = vec![OFFSET + n as u8];
    out.resize(1 + pairs.div_ceil(6), OFFSET);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + bit / 6] += 1 << (5 - bit % 6);
            }
            bit += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses a whole graph6 file: one graph per line, `#` comment lines and
/// blank lines skipped, an optional `>>graph6<<` prefix tolerated. Returns
/// each surviving line alongside its graph; errors carry the 1-based line.
pub fn parse_graph6_lines(content: &str) -> Result<Vec<(String, Graph)>, Graph6LineError> {
    let mut result = Vec::new();
    for (idx, raw) in content.lines().enumerate() {
        let mut line = raw.trim_end_matches('\r');
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = parse_graph6(line).map_err(|source| Graph6LineError {
            line: idx + 1,
            source,
        })?;
        result.push((line.to_string(), graph));
    }
    Ok(result)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct Graph6LineError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}
