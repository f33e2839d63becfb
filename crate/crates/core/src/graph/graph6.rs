//! graph6 encoding (nauty): a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable byte.

use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], i: usize) -> Result<u64> {
    match bytes.get(i) {
        None => Err(bad(i, "unexpected end of input")),
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(bad(i, format!("byte 0x{b:02x} outside 63..=126"))),
    }
}

/// Returns `(n, offset of first data byte)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(bad(0, "empty input"));
    }
    if bytes[0] != b'~' {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&b'~') { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in start..start + width {
        n = (n << 6) | sextet(bytes, i)?;
    }
    let small = if width == 3 { 63 } else { 258_048 };
    if n < small {
        return Err(bad(0, format!("non-minimal size header for n={n}")));
    }
    Ok((n as usize, start + width))
}

/// Parses a single graph6 line. A leading `>>graph6<<` marker and a trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let skip = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[skip..];
    let at = |e: Error| match e {
        Error::Graph6 { offset, reason } => Error::Graph6 { offset: offset + skip, reason },
        other => other,
    };

    let (n, start) = parse_size(bytes).map_err(at)?;
    if n > 100_000 {
        return Err(at(bad(0, format!("n={n} exceeds the supported maximum"))));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < start + nbytes {
        return Err(at(bad(bytes.len(), format!("expected {nbytes} data bytes"))));
    }
    if bytes.len() > start + nbytes {
        return Err(at(bad(start + nbytes, "trailing bytes after adjacency data")));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut word = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                word = sextet(bytes, start + bit / 6).map_err(at)?;
            }
            if word & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = start + nbytes - 1;
        let pad = 6 - nbits % 6;
        if sextet(bytes, last).map_err(at)? & ((1 << pad) - 1) != 0 {
            return Err(at(bad(last, "nonzero padding bits")));
        }
    }
    Graph::from_edges(n, edges)
}

/// Canonical graph6 encoding (no `>>graph6<<` marker, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let width = if n <= 258_047 { 3 } else { 6 };
        out.extend(std::iter::repeat_n(b'~', if width == 3 { 1 } else { 2 }));
        for s in (0..width).rev() {
            out.push(((n >> (6 * s)) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Reads every non-empty line of a graph6 file.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| parse_graph6(l.trim())).collect()
}
