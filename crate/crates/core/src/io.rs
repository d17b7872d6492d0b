//! Text formats for graphs: a plain edge list and McKay's graph6.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Parses `"n m"` followed by `m` lines `"u v"` (0-based).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    let mut next = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::parse(format!("edge list ended while reading {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(format!("expected {what}, found {tok:?}")))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next("edge endpoint")?;
        let v = next("edge endpoint")?;
        pairs.push((u, v));
    }
    if let Some(extra) = tokens.next() {
        return Err(Error::parse(format!(
            "trailing token {extra:?} after {m} edges"
        )));
    }
    Graph::from_edges(n, pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Decodes one graph6 string; an optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(format!("byte {b} is not a graph6 character")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::parse("empty graph6 string")),
        [126, 126, rest @ ..] => (decode_size(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (decode_size(rest, 3)?, &rest[3..]),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::parse(format!(
            "graph6 body for n = {n} needs {expected} bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(rest: &[u8], len: usize) -> Result<usize> {
    if rest.len() < len {
        return Err(Error::parse("truncated graph6 size field"));
    }
    Ok(rest[..len]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Guesses the format: a first line of two integers means an edge list.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let mut parts = first.split_whitespace();
    let numeric = |p: Option<&str>| p.is_some_and(|t| t.parse::<usize>().is_ok());
    if numeric(parts.next()) && numeric(parts.next()) {
        GraphFormat::EdgeList
    } else {
        GraphFormat::Graph6
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match detect_format(text) {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g) + "\n",
    }
}
