//! Text formats: graph6 and a plain edge list.
//!
//! graph6 stores `n` in the `N(n)` header (one byte for `n < 63`, `~` plus
//! three bytes up to 258047, `~~` plus six bytes beyond), followed by the
//! upper triangle of the adjacency matrix in column order
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte, each byte offset
//! by 63 and the last one zero-padded.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();

    if let Some(pos) = bytes.iter().position(|b| !(OFFSET..=LONG).contains(b)) {
        return Err(Error::parse(pos, format!("byte {} outside 63..126", bytes[pos])));
    }
    if bytes.is_empty() {
        return Err(Error::parse(0, "missing header"));
    }

    let (n, body_start) = decode_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < byte_count {
        return Err(Error::parse(
            bytes.len(),
            format!("truncated: expected {byte_count} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > byte_count {
        return Err(Error::parse(body_start + byte_count, "unexpected trailing bytes"));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    for pad in k..byte_count * 6 {
        if bit(pad) {
            return Err(Error::parse(body_start + pad / 6, "nonzero padding bit"));
        }
    }
    Graph::from_edge_list(n, pairs)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let digits = |start: usize, count: usize| -> Result<usize> {
        let end = start + count;
        if bytes.len() < end {
            return Err(Error::parse(bytes.len(), "truncated order header"));
        }
        Ok(bytes[start..end]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - OFFSET)))
    };
    if bytes[0] != LONG {
        Ok((usize::from(bytes[0] - OFFSET), 1))
    } else if bytes.get(1) == Some(&LONG) {
        Ok((digits(2, 6)?, 8))
    } else {
        Ok((digits(1, 3)?, 4))
    }
}

/// Canonical graph6 encoding, without trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    let push_digits = |out: &mut Vec<u8>, value: usize, count: usize| {
        for shift in (0..count).rev() {
            out.push(((value >> (6 * shift)) & 0x3f) as u8 + OFFSET);
        }
    };
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG);
        push_digits(&mut out, n, 3);
    } else {
        out.extend([LONG, LONG]);
        push_digits(&mut out, n, 6);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: a `n m` header line followed by `m` lines
/// `u v`. Text after `#` is ignored; blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let [u, v] = parse_pair(line_no, line)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header promises {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edge_list(n, pairs)
}

// Offsets reported for edge lists are line numbers.
fn parse_pair(line_no: usize, line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(line_no, format!("expected two integers, got `{line}`")));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::parse(line_no, format!("not a vertex index: `{field}`")))?;
    }
    Ok(out)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads every graph in `text`. Edge-list input (first meaningful line is
/// two integers) yields one graph; otherwise each non-empty line is parsed
/// as graph6. Returned indices are 1-based line numbers.
pub fn parse_graphs(text: &str) -> Result<Vec<(usize, Graph)>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let is_edge_list = first.is_some_and(|l| {
        let fields: Vec<_> = l.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    });
    if is_edge_list {
        return Ok(vec![(1, parse_edge_list(text)?)]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map(|g| (i + 1, g)).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse {
                    offset,
                    message: format!("line {}: {message}", i + 1),
                },
                other => other,
            })
        })
        .collect()
}
