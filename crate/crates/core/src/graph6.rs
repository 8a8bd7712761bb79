//! graph6 encoding (no `>>graph6<<` header).
//!
//! Order is written as `N(n)`: one byte `n + 63` for `n <= 62`, otherwise
//! `126` followed by three 6-bit groups. The upper triangle follows in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte with each byte offset by 63.

use crate::graph::{Graph, GraphError, MAX_ORDER};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    decode_bytes(text.as_bytes())
}

pub fn decode_bytes(raw: &[u8]) -> Result<Graph, GraphError> {
    let bytes = raw
        .strip_suffix(b"\n")
        .map(|b| b.strip_suffix(b"\r").unwrap_or(b))
        .unwrap_or(raw);
    let malformed = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form, only used for n >= 258048
            return Err(GraphError::OrderTooLarge(258048));
        }
        if bytes.len() < 4 {
            return Err(malformed("truncated order field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(GraphError::MalformedGraph6(format!(
            "expected {} data bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    // padding bits must be zero
    if (bits..body.len() * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}
