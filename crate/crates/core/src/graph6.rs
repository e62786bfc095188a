//! graph6 records: the compact ASCII interchange format used by graph
//! corpora. One record per line; an optional `>>graph6<<` header line is
//! tolerated and skipped by [`parse_file`].

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: &str) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.to_string(),
    }
}

/// Decode one graph6 record (no header, no trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty record"));
    }
    let (n, mut pos) = decode_order(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(parse_err(0, &format!("vertex count {n} out of range")));
    }
    let bits_needed = n * (n - 1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() - pos != bytes_needed {
        return Err(parse_err(
            pos,
            &format!(
                "expected {bytes_needed} data bytes for n = {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for v in 1..n {
        for u in 0..v {
            if bit % 6 == 0 {
                current = decode_byte(bytes, pos)?;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // Padding bits must be zero.
    if bit % 6 != 0 {
        let mask = (1u8 << (6 - bit % 6)) - 1;
        if current & mask != 0 {
            return Err(parse_err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encode a graph as a graph6 record.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_order(n);
    let mut current = 0u8;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                current |= 1 << (5 - bit % 6);
            }
            bit += 1;
            if bit % 6 == 0 {
                out.push((current + 63) as char);
                current = 0;
            }
        }
    }
    if bit % 6 != 0 {
        out.push((current + 63) as char);
    }
    out
}

/// Parse a graph6 file body: one record per line, blank lines and a
/// leading `>>graph6<<` header skipped. Returns `(line_number, graph)`
/// pairs with 1-based line numbers.
pub fn parse_file(contents: &str) -> Result<Vec<(usize, Graph)>> {
    let mut out = Vec::new();
    for (idx, line) in contents.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("line {}: {}", idx + 1, reason),
            },
            other => other,
        })?;
        out.push((idx + 1, g));
    }
    Ok(out)
}

fn decode_byte(bytes: &[u8], pos: usize) -> Result<u8> {
    let b = bytes[pos];
    if !(63..=126).contains(&b) {
        return Err(parse_err(pos, &format!("byte {b} outside graph6 charset")));
    }
    Ok(b - 63)
}

/// Decode the leading order field. Returns `(n, bytes consumed)`.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let b0 = decode_byte(bytes, 0)?;
    if b0 < 63 {
        return Ok((b0 as usize, 1));
    }
    // 126 prefix: n in the next three bytes (n <= 258047 in the format;
    // our cap is far below that).
    if bytes.len() < 4 {
        return Err(parse_err(0, "truncated long order field"));
    }
    let mut n = 0usize;
    for i in 1..4 {
        n = (n << 6) | decode_byte(bytes, i)? as usize;
    }
    Ok((n, 4))
}

fn encode_order(n: usize) -> String {
    if n <= 62 {
        ((n as u8 + 63) as char).to_string()
    } else {
        let mut s = String::from("~");
        for shift in [12, 6, 0] {
            s.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
        s
    }
}
