//! graph6 records.
//!
//! A record is the order followed by the upper triangle of the adjacency
//! matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per printable character (`value + 63`) and zero padded. Orders up to 62
//! take one character; larger orders use the `~` prefix and 18 bits.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

const SHORT_MAX: usize = 62;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    // every byte is in 63..=126
    String::from_utf8(out).unwrap()
}

pub fn decode_graph6(record: &str) -> Result<Graph> {
    let record = record.trim_end_matches(['\n', '\r']);
    let record = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = record.as_bytes();
    let bad = |msg: &str| Error::MalformedRecord(format!("graph6 '{record}': {msg}"));
    if bytes.is_empty() {
        return Err(bad("empty record"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported or truncated order prefix"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= SHORT_MAX {
            return Err(bad("long-form order below 63"));
        }
        (n, &bytes[4..])
    };
    if n == 0 {
        return Err(bad("order 0"));
    }
    if n > MAX_ORDER {
        return Err(Error::out_of_range("order", n, MAX_ORDER));
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for order {n}, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..body.len() * 6).any(bit) {
        return Err(bad("nonzero padding"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Decode a newline-separated stream, skipping blank lines and an optional
/// header.
pub fn decode_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(decode_graph6)
        .collect()
}
