//! graph6 encoding, short form (order up to 62).
//!
//! One printable ASCII record per graph: the byte `63 + n` followed by
//! the upper triangle of the adjacency matrix in column-major order,
//! packed six bits per byte, each byte offset by 63. The long forms
//! for larger graphs are intentionally not implemented.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 record.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Parse {
            offset: 0,
            reason: "empty record".into(),
        });
    }
    if bytes[0] == b'~' {
        return Err(Error::Graph6Parse {
            offset: 0,
            reason: "long-form length prefix is not supported (order > 62)".into(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6Parse {
                offset: i,
                reason: format!("byte {b} outside the printable range 63..126"),
            });
        }
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(Error::Graph6Parse {
            offset: 0,
            reason: "encoded graph has no vertices".into(),
        });
    }
    let bit_count = n * (n - 1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() < expected {
        return Err(Error::Graph6Parse {
            offset: bytes.len(),
            reason: format!(
                "record truncated: need {expected} bytes for order {n}, got {}",
                bytes.len()
            ),
        });
    }
    if bytes.len() > expected {
        return Err(Error::Graph6Parse {
            offset: expected,
            reason: "trailing garbage after the edge bits".into(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + bit / 6];
            if (byte - OFFSET) >> (5 - bit % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Emits the short-form graph6 record for `g`.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT {
        return Err(Error::Graph6Unsupported(n));
    }
    let mut out = vec![OFFSET + n as u8];
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.has_edge(row, col));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Reads a graph6 file: one record per line, blank lines and `#`
/// comments ignored. Errors carry the one-based line number.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| match e {
            Error::Graph6Parse { offset, reason } => Error::Graph6Parse {
                offset,
                reason: format!("line {}: {reason}", i + 1),
            },
            other => other,
        })?);
    }
    Ok(graphs)
}
