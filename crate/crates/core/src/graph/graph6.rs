//! graph6 codec (no header, one graph per string).
//!
//! Pairs `(i, j)` with `i < j` are emitted column by column: `(0,1), (0,2), (1,2), (0,3), ...`,
//! six bits per byte, most significant bit first, each byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(offset, format!("byte {b} outside 63..=126"))),
        None => Err(err(offset, "unexpected end of input")),
    }
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (order, mut pos) = match bytes.first() {
        None => return Err(err(0, "empty input")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(err(1, "eight-byte order encoding exceeds 64 vertices"));
            }
            let n = (1..4).try_fold(0usize, |acc, i| Ok::<_, Error>((acc << 6) | sextet(bytes, i)? as usize))?;
            (n, 4)
        }
        Some(_) => (sextet(bytes, 0)? as usize, 1),
    };
    if order == 0 || order > MAX_ORDER {
        return Err(err(0, format!("order {order} outside 1..={MAX_ORDER}")));
    }
    let pairs = order * (order - 1) / 2;
    let payload = pairs.div_ceil(6);
    let mut g = Graph::empty(order)?;
    let mut k = 0;
    'outer: for j in 1..order {
        for i in 0..j {
            let byte = pos + k / 6;
            let bits = sextet(bytes, byte)?;
            if (bits >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    pos += payload;
    if payload > 0 {
        // padding bits of the final byte must be zero
        let last = sextet(bytes, pos - 1)?;
        let used = pairs - (payload - 1) * 6;
        if used < 6 && last & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    if pos != bytes.len() {
        return Err(err(pos, "trailing bytes after payload"));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
