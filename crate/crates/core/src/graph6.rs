//! graph6 encoding (one graph per ASCII line).
//!
//! Header: `n + 63` for `n <= 62`, otherwise `~` followed by three bytes
//! carrying `n` as an 18-bit big-endian number. The body packs the upper
//! triangle column by column (`(0,1), (0,2), (1,2), (0,3), ...`) six bits
//! per byte, most significant bit first, each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {offset}: {byte:#04x} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: graph has {n} vertices, the limit is {MAX_VERTICES}")]
    TooManyVertices { offset: usize, n: usize },
    #[error("byte {offset}: truncated header")]
    TruncatedHeader { offset: usize },
    #[error("byte {offset}: expected {expected} body bytes, found {found}")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: padding bits after the last edge are not zero")]
    NonzeroPadding { offset: usize },
}

const HEADER: &str = ">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, bytes) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: skip + i,
                byte: b,
            });
        }
    }

    let (n, header_len) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader {
                offset: skip + bytes.len(),
            });
        }
        if bytes[1] == 126 {
            // 8-byte header, only used for n >= 258048
            return Err(Graph6Error::TooManyVertices {
                offset: skip + 1,
                n: 258_048,
            });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices { offset: skip, n });
    }

    let body = &bytes[header_len..];
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            offset: skip + header_len,
            expected,
            found: body.len(),
        });
    }

    let mut g = Graph::empty(n).expect("n checked above");
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[k / 6] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: skip + header_len + k / 6,
            });
        }
    }
    Ok(g)
}

/// graph6 string under the graph's current labelling, without a newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parse every non-empty line; errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}
