//! Graph serialization: a plain edge-list text format and graph6.
//!
//! Edge list: optional `#` comment lines, then a line `n m`, then `m` lines
//! `u v` with 0-based endpoints. graph6 is the standard 6-bit format; both
//! the short (n <= 62) and the 3-byte (n <= 258047) order encodings are
//! supported.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `n m` header, got {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: expected edge `u v`, got {found:?}")]
    BadEdge { line: usize, found: String },
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("empty input")]
    Empty,
}

/// Parses the edge-list format. `#` lines and blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut it = header.split_whitespace();
    let (n, m) = match (
        it.next().and_then(|t| t.parse::<usize>().ok()),
        it.next().and_then(|t| t.parse::<usize>().ok()),
        it.next(),
    ) {
        (Some(n), Some(m), None) => (n, m),
        _ => {
            return Err(ParseError::BadHeader {
                line: header_line,
                found: header.to_string(),
            })
        }
    };

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let mut it = text.split_whitespace();
        let (u, v) = match (
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(ParseError::BadEdge {
                    line,
                    found: text.to_string(),
                })
            }
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges).map_err(|source| ParseError::Graph {
        line: last_line,
        source,
    })
}

/// Writes the edge-list format, with optional leading `#` comment lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", g.order(), g.size()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph as a graph6 string (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    } else {
        panic!("graph6 encoding beyond 258047 vertices not supported");
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes a graph6 string; the optional `>>graph6<<` header is accepted.
pub fn parse_graph6(s: &str) -> Result<Graph, ParseError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).trim();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let err = |m: &str| ParseError::Graph6(m.to_string());
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("byte out of graph6 range"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(err("8-byte order encoding not supported"));
        }
        if bytes.len() < 4 {
            return Err(err("truncated order"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(err("adjacency bit count does not match order"));
    }
    let mut edges = Vec::new();
    let mut acc = 0u32;
    let mut have = 0;
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if have == 0 {
                if pos >= bytes.len() {
                    break 'outer;
                }
                acc = (bytes[pos] - 63) as u32;
                pos += 1;
                have = 6;
            }
            have -= 1;
            if (acc >> have) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    Graph::from_edges(n, edges).map_err(|source| ParseError::Graph { line: 1, source })
}

/// Parses either format: content whose first data line is `n m` is treated
/// as an edge list, anything else as graph6.
pub fn parse_auto(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(ParseError::Empty),
        Some(line) => {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok()) {
                parse_edge_list(text)
            } else {
                parse_graph6(line)
            }
        }
    }
}
