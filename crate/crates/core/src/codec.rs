//! Graph interchange formats: graph6 and a plain edge-list text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! into 6-bit chunks, each offset by 63 into printable ASCII. Vertex counts
//! up to 62 fit in a single header byte; larger graphs use the standard
//! extended headers introduced by `~`.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("input is empty")]
    Empty,

    #[error("graph6 size header is malformed")]
    MalformedHeader,

    #[error("graph6 vertex count {n} is too large for this build")]
    CountTooLarge { n: u64 },

    #[error("byte 0x{byte:02x} at position {pos} is outside the graph6 range 63..=126")]
    ByteOutOfRange { byte: u8, pos: usize },

    #[error("graph6 data truncated: need {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },

    #[error("trailing data after position {pos}")]
    TrailingGarbage { pos: usize },

    #[error("edge list header must be two integers \"n m\"")]
    BadHeader,

    #[error("edge list line {line}: {reason}")]
    BadEdgeLine { line: usize, reason: String },

    #[error("edge {u}-{v} at line {line} is a self-loop")]
    SelfLoop { u: usize, v: usize, line: usize },

    #[error("duplicate edge {u}-{v} at line {line}")]
    DuplicateEdge { u: usize, v: usize, line: usize },

    #[error("vertex {v} at line {line} out of range for {n} vertices")]
    EdgeVertexOutOfRange { v: usize, n: usize, line: usize },

    #[error("edge list declares {declared} edges but provides {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

pub type CodecResult<T> = std::result::Result<T, CodecError>;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        bytes.push(126);
        bytes.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> CodecResult<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::ByteOutOfRange { byte: b, pos });
        }
    }
    let (n, mut pos) = parse_graph6_size(bytes)?;
    let n_usize = usize::try_from(n).map_err(|_| CodecError::CountTooLarge { n })?;
    if n_usize > (1 << 26) {
        // Adjacency bits alone would exceed hundreds of terabytes.
        return Err(CodecError::CountTooLarge { n });
    }
    let n = n_usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let found = bytes.len() - pos;
    if found < expected {
        return Err(CodecError::Truncated { expected, found });
    }
    if found > expected {
        return Err(CodecError::TrailingGarbage {
            pos: pos + expected,
        });
    }
    let mut edges = Vec::new();
    let mut chunk = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if chunk & (1 << (left - 1)) != 0 {
                edges.push((i, j));
            }
            left -= 1;
        }
    }
    // Padding bits past the triangle must be zero.
    if left > 0 && chunk & ((1 << left) - 1) != 0 {
        return Err(CodecError::TrailingGarbage { pos: pos - 1 });
    }
    Ok(Graph::from_edge_list(n, &edges).expect("decoded edges are simple and in range"))
}

fn parse_graph6_size(bytes: &[u8]) -> CodecResult<(u64, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as u64, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(CodecError::MalformedHeader);
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - 63) as u64;
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(CodecError::MalformedHeader);
    }
    let mut n = 0u64;
    for &b in &bytes[1..4] {
        n = n << 6 | (b - 63) as u64;
    }
    Ok((n, 4))
}

/// Parses the plain text format: a header line `n m`, then exactly `m`
/// lines `u v` with `0 <= u < v < n`. Blank lines and `#` comments are
/// not part of the format and are rejected like any other malformed line,
/// except for trailing blank lines, which are ignored.
pub fn parse_edge_list(text: &str) -> CodecResult<Graph> {
    let mut lines = text.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some((_, l)) => break l,
            None => return Err(CodecError::Empty),
        }
    };
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(CodecError::BadHeader)?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(CodecError::BadHeader)?;
    if parts.next().is_some() {
        return Err(CodecError::BadHeader);
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            // Tolerated only after all m edges have been read.
            continue;
        }
        if edges.len() == m {
            return Err(CodecError::EdgeCountMismatch {
                declared: m,
                found: m + 1,
            });
        }
        let mut parts = raw.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let u: usize = a.parse().map_err(|_| CodecError::BadEdgeLine {
                    line,
                    reason: format!("cannot parse '{a}' as a vertex"),
                })?;
                let v: usize = b.parse().map_err(|_| CodecError::BadEdgeLine {
                    line,
                    reason: format!("cannot parse '{b}' as a vertex"),
                })?;
                (u, v)
            }
            _ => {
                return Err(CodecError::BadEdgeLine {
                    line,
                    reason: "expected exactly two vertices".to_string(),
                })
            }
        };
        if u == v {
            return Err(CodecError::SelfLoop { u, v, line });
        }
        if u > v {
            return Err(CodecError::BadEdgeLine {
                line,
                reason: format!("endpoints must satisfy u < v, got {u} {v}"),
            });
        }
        if v >= n {
            return Err(CodecError::EdgeVertexOutOfRange { v, n, line });
        }
        if edges.contains(&(u, v)) {
            return Err(CodecError::DuplicateEdge { u, v, line });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CodecError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges).expect("validated above"))
}
