//! graph6 encoding (one graph per line, no header).
//!
//! Every byte stores six bits plus 63. The vertex count comes first. The
//! upper triangle follows in column order: `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`. The last byte is padded with zero bits.

use std::io::BufRead;

use crate::{Error, Graph, Result};

const OFFSET: u8 = 63;
const LONG: u8 = 126;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u64> {
    let b = *bytes.get(at).ok_or_else(|| err(at, "unexpected end of input"))?;
    if !(OFFSET..=LONG).contains(&b) {
        return Err(err(at, format!("byte {b:#04x} outside the graph6 range 63..=126")));
    }
    Ok(u64::from(b - OFFSET))
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(err(0, "empty input")),
        Some(&LONG) if bytes.get(1) == Some(&LONG) => {
            let mut n = 0u64;
            for i in 2..8 {
                n = n << 6 | sixbits(bytes, i)?;
            }
            if n > 68_719_476_735 {
                return Err(err(2, "vertex count too large"));
            }
            Ok((n as usize, 8))
        }
        Some(&LONG) => {
            let mut n = 0u64;
            for i in 1..4 {
                n = n << 6 | sixbits(bytes, i)?;
            }
            Ok((n as usize, 4))
        }
        Some(_) => Ok((sixbits(bytes, 0)? as usize, 1)),
    }
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (n, start) = parse_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!(
                "length {} does not match {} expected for {n} vertices",
                bytes.len(),
                expected
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = start + k / 6;
            let chunk = sixbits(bytes, byte)?;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = expected - 1;
        let pad = 6 - bits % 6;
        if sixbits(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(err(last, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph as a canonical graph6 string (no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([LONG, LONG]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// One line of a graph6 stream: its 1-based line number and the parse result.
pub type Graph6Line = (usize, String, Result<Graph>);

/// Parses a graph6 stream line by line, skipping blank lines. A malformed
/// line yields an error entry; reading continues.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Graph6Line> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => {
            let parsed = parse_graph6(l.trim());
            Some((i + 1, l.trim().to_string(), parsed))
        }
        Err(e) => Some((
            i + 1,
            String::new(),
            Err(Error::Io {
                path: "<graph6 stream>".into(),
                source: e,
            }),
        )),
    })
}
