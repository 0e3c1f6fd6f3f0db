//! graph6 codec.
//!
//! The size header is `n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups (18-bit `n`). The payload packs the upper triangle
//! column by column, `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte,
//! most significant bit first, zero padded.

use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are stripped.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(GraphError::InvalidCharacter { offset, byte });
        }
    }
    let (n, header_len) = decode_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }

    let payload = &bytes[header_len..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if payload.len() < expected {
        return Err(GraphError::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(GraphError::TrailingData(payload.len() - expected));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = payload[k / 6] - BIAS;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = payload[expected - 1] - BIAS;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(GraphError::NonzeroPadding);
        }
    }
    Ok(g)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let group = |range: std::ops::Range<usize>| -> Result<usize, GraphError> {
        if bytes.len() < range.end {
            return Err(GraphError::Truncated {
                expected: range.end,
                found: bytes.len(),
            });
        }
        Ok(bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
    };
    match bytes {
        [b'~', b'~', ..] => Ok((group(2..8)?, 8)),
        [b'~', ..] => Ok((group(1..4)?, 4)),
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
        [] => Err(GraphError::Empty),
    }
}

/// Encodes `g` in canonical graph6 (no header, no newline).
pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
