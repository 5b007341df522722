//! graph6 short form, bit-exact.
//!
//! Layout: first byte is `n + 63` (0 <= n <= 62), followed by
//! `ceil(n(n-1)/2 / 6)` bytes. Each byte holds six upper-triangle adjacency
//! bits in column-major order (0,1),(0,2),(1,2),(0,3),..., most significant
//! bit first, offset by 63 so everything stays printable ASCII. Padding bits
//! in the final byte must be zero. The optional `>>graph6<<` header and the
//! long forms (n > 62) are rejected.

use crate::error::{Error, Result};
use crate::graph::{upper_triangle_pairs, Graph};

const OFFSET: u8 = 63;

/// Parses a single graph6 line (no trailing newline).
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let err = |offset: usize, reason: &str| Error::Graph6Parse {
        offset,
        reason: reason.into(),
    };

    let &header = input.first().ok_or_else(|| err(0, "empty input"))?;
    if header == 126 {
        return Err(err(0, "long form (n > 62) not supported"));
    }
    if !(OFFSET..=125).contains(&header) {
        return Err(err(0, "byte out of range [63,126]"));
    }
    let n = (header - OFFSET) as usize;

    let bit_count = n * (n.saturating_sub(1)) / 2;
    let body_len = bit_count.div_ceil(6);
    let body = &input[1..];
    if body.len() < body_len {
        return Err(err(
            input.len(),
            &format!(
                "truncated: expected {body_len} adjacency bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(err(1 + body_len, "trailing garbage after adjacency bytes"));
    }

    let mut g = Graph::empty(n)?;
    for (idx, (u, v)) in upper_triangle_pairs(n).enumerate() {
        let byte = body[idx / 6];
        if !(OFFSET..=126).contains(&byte) {
            return Err(err(1 + idx / 6, "byte out of range [63,126]"));
        }
        let group = byte - OFFSET;
        if group >> (5 - idx % 6) & 1 == 1 {
            g.add_edge(u, v)?;
        }
    }
    // zero padding in the last byte
    for pad in bit_count..body_len * 6 {
        let byte = body[pad / 6];
        if !(OFFSET..=126).contains(&byte) {
            return Err(err(1 + pad / 6, "byte out of range [63,126]"));
        }
        if (byte - OFFSET) >> (5 - pad % 6) & 1 == 1 {
            return Err(err(1 + pad / 6, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical short-form encoding; requires `n <= 62`.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let mut out = vec![OFFSET + n as u8];
    out.resize(1 + bit_count.div_ceil(6), OFFSET);
    for (idx, (u, v)) in upper_triangle_pairs(n).enumerate() {
        if g.has_edge(u, v) {
            out[1 + idx / 6] += 1 << (5 - idx % 6);
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses a newline-delimited graph6 corpus; blank lines are skipped.
/// Error positions are line-oriented: the returned tuple carries the
/// 1-based line number alongside the parse error.
pub fn parse_graph6_lines(data: &[u8]) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    let mut graphs = Vec::new();
    for (lineno, line) in data.split(|&b| b == b'\n').enumerate() {
        let line = line.strip_suffix(b"\r").unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| (lineno + 1, e))?);
    }
    Ok(graphs)
}
