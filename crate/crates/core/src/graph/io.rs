//! Text formats.
//!
//! Edge list: an optional header `p <vertex_count>`, then one edge per line as
//! `u v` or `u v m` (multiplicity `m`), 0-based. `#` starts a comment. Without
//! a header the vertex count is one more than the largest label seen.
//!
//! graph6: the standard printable encoding for simple undirected graphs.

use super::LabeledMultigraph;
use crate::error::{Error, Result};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledMultigraph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut offset = 0;
        for tok in content.split_whitespace() {
            let col = content[offset..].find(tok).unwrap() + offset;
            offset = col + tok.len();
            tokens.push((col + 1, tok));
        }
        if tokens.is_empty() {
            continue;
        }
        if tokens[0].1 == "p" {
            if declared.is_some() || !edges.is_empty() {
                return Err(parse_err(line_no, 1, "header must come first and appear once"));
            }
            if tokens.len() != 2 {
                return Err(parse_err(line_no, 1, "expected `p <vertex_count>`"));
            }
            let (col, tok) = tokens[1];
            declared = Some(
                tok.parse()
                    .map_err(|_| parse_err(line_no, col, format!("bad vertex count `{tok}`")))?,
            );
            continue;
        }
        if tokens.len() != 2 && tokens.len() != 3 {
            return Err(parse_err(
                line_no,
                tokens[0].0,
                format!("expected `u v` or `u v m`, found {} fields", tokens.len()),
            ));
        }
        let num = |(col, tok): (usize, &str)| -> Result<u64> {
            tok.parse::<u64>()
                .map_err(|_| parse_err(line_no, col, format!("expected a nonnegative integer, found `{tok}`")))
        };
        let u = num(tokens[0])? as usize;
        let v = num(tokens[1])? as usize;
        let m = if tokens.len() == 3 { num(tokens[2])? } else { 1 };
        if u == v {
            return Err(parse_err(line_no, tokens[0].0, format!("loop at vertex {u}")));
        }
        if m == 0 || m > u32::MAX as u64 {
            return Err(parse_err(line_no, tokens[2].0, "multiplicity out of range"));
        }
        if let Some(n) = declared {
            for (col, x) in [(tokens[0].0, u), (tokens[1].0, v)] {
                if x >= n {
                    return Err(parse_err(line_no, col, format!("vertex {x} exceeds header count {n}")));
                }
            }
        }
        edges.push((u, v, m as u32));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    let mut g = LabeledMultigraph::new(n);
    for (u, v, m) in edges {
        g.add_edges(u, v, m)?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &LabeledMultigraph) -> String {
    let mut out = format!("p {}\n", g.vertex_count());
    for ((u, v), m) in g.edges() {
        if m == 1 {
            out.push_str(&format!("{u} {v}\n"));
        } else {
            out.push_str(&format!("{u} {v} {m}\n"));
        }
    }
    out
}

const G6_HEADER: &str = ">>graph6<<";

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let get = |i: usize| -> Result<u64> {
        let b = *bytes
            .get(i)
            .ok_or_else(|| parse_err(1, i + 1, "truncated graph6 size field"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(1, i + 1, format!("invalid graph6 byte {b}")));
        }
        Ok((b - 63) as u64)
    };
    let first = get(0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if get(1)? < 63 {
        let n = (get(1)? << 12) | (get(2)? << 6) | get(3)?;
        return Ok((n as usize, 4));
    }
    let mut n = 0u64;
    for i in 2..8 {
        n = (n << 6) | get(i)?;
    }
    Ok((n as usize, 8))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn parse_graph6(text: &str) -> Result<LabeledMultigraph> {
    let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("").trim();
    let body = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = body.as_bytes();
    let (n, mut pos) = decode_size(bytes)?;
    let needed_bits = n * n.saturating_sub(1) / 2;
    let needed_bytes = needed_bits.div_ceil(6);
    if bytes.len() != pos + needed_bytes {
        return Err(parse_err(
            1,
            bytes.len().min(pos + needed_bytes) + 1,
            format!("expected {needed_bytes} adjacency bytes for {n} vertices, found {}", bytes.len().saturating_sub(pos)),
        ));
    }
    let mut g = LabeledMultigraph::new(n);
    let mut bit = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                let b = bytes[pos];
                if !(63..=126).contains(&b) {
                    return Err(parse_err(1, pos + 1, format!("invalid graph6 byte {b}")));
                }
                current = b - 63;
                pos += 1;
            }
            if (current >> (5 - bit % 6)) & 1 == 1 {
                g.add_edges(i, j, 1)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &LabeledMultigraph) -> Result<String> {
    if let Some(((u, v), m)) = g.edges().find(|&(_, m)| m > 1) {
        return Err(Error::Graph6Multigraph(u, v, m));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | (g.multiplicity(i, j) > 0) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

/// A first meaningful line made of a single token that is not a number is
/// taken as graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with(G6_HEADER) => Format::Graph6,
        Some(l) if !l.contains(char::is_whitespace) && l.parse::<u64>().is_err() => Format::Graph6,
        _ => Format::EdgeList,
    }
}

pub fn parse_auto(text: &str) -> Result<LabeledMultigraph> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}
