//! graph6 encoding for graphs of order at most 64.
//!
//! Layout: an order prefix (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit chunks), then the upper triangle of the adjacency matrix read
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian into
//! 6-bit chunks, zero padded, each chunk offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Error::MalformedInput("empty graph6 string".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedInput(format!(
            "byte {bad:#04x} outside the graph6 range"
        )));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::MalformedInput("unsupported graph6 order prefix".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::MalformedInput(format!("order {n} not in 1..=64")));
    }
    let pairs = n * (n - 1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::MalformedInput(format!(
            "expected {} data bytes for order {n}, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Decodes one graph per non-empty line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(decode)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{mobius_ladder, prism};

    #[test]
    fn hand_encoded_values() {
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(encode(&p4), "Ch");
        let g = decode("C~").unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 6));
        // Reference string from a widely used graph library.
        let g5 = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g5), "DQc");
        assert_eq!(encode(&Graph::new(1, &[]).unwrap()), "@");
    }

    #[test]
    fn large_order_prefix() {
        let n = 64;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let c64 = Graph::new(n, &edges).unwrap();
        let s = encode(&c64);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), c64);
    }

    #[test]
    fn round_trip_generators() {
        for n in (6..=18).step_by(2) {
            for g in [mobius_ladder(n).unwrap(), prism(n).unwrap()] {
                assert_eq!(decode(&encode(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn malformed() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("C\x7f").is_err());
        assert!(decode("?").is_err());
    }
}
