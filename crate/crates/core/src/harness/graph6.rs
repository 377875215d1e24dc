//! graph6 encoding (orders up to 64), used to record failing members.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let bits: Vec<bool> = pairs(n).map(|(i, j)| g.has_edge(i, j)).collect();
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bad = |msg: &str| Error::Graph6(format!("{s:?}: {msg}"));
    let bytes = s.trim_end().as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty string")),
        [126, 126, ..] => return Err(bad("order too large")),
        [126, rest @ ..] if rest.len() >= 3 => {
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [126, ..] => return Err(bad("truncated order")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(bad(&format!(
            "expected {needed} data bytes, found {}",
            body.len()
        )));
    }
    let edges: Vec<(usize, usize)> = pairs(n)
        .enumerate()
        .filter(|&(k, _)| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::new(n, &edges)
}
