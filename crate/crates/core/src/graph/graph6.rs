//! graph6, short form only (at most 62 vertices).
//!
//! A graph on `n` vertices is written as the byte `n + 63` followed by the
//! upper triangle of the adjacency matrix in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ..`), packed six bits per byte, most
//! significant bit first, zero padded, each group offset by 63.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

const MAX_SHORT_N: usize = 62;
const HEADER: &[u8] = b">>graph6<<";

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let data = &bytes[start..end];
    let err = |offset: usize, msg: &str| Error::Graph6 {
        offset: start + offset,
        msg: msg.to_string(),
    };

    let &first = data.first().ok_or_else(|| err(0, "empty input"))?;
    if first == 126 {
        return Err(err(
            0,
            "long-form graph6 (more than 62 vertices) is not supported",
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, "byte out of range 63..=126"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    debug_assert!(n <= MAX_SHORT_N);

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &data[1..];
    if body.len() < nbytes {
        return Err(err(data.len(), "truncated adjacency data"));
    }
    if body.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after adjacency data"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, "byte out of range 63..=126"));
        }
    }
    let padding = nbytes * 6 - nbits;
    if padding > 0 {
        let last = body[nbytes - 1] - 63;
        if last & ((1 << padding) - 1) != 0 {
            return Err(err(nbytes, "non-zero padding bits"));
        }
    }

    let bit = |idx: usize| {
        let group = body[idx / 6] - 63;
        (group >> (5 - idx % 6)) & 1 == 1
    };
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                adj[i] = adj[i].with(j);
                adj[j] = adj[j].with(i);
            }
            idx += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_N {
        return Err(Error::Capacity {
            what: "graph6 short form",
            requested: n,
            cap: MAX_SHORT_N,
        });
    }
    let mut out = vec![(n + 63) as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_edge() {
        let g = parse_graph6(b"A_").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(to_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn four_cycle_by_hand() {
        // n = 4 -> 'C'. Bits x01 x02 x12 x03 x13 x23 of the cycle 0-1-2-3-0
        // are 1 0 1 1 0 1 = 45, and 45 + 63 = 108 = 'l'.
        let g = parse_graph6(b"Cl").unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(to_graph6(&Graph::cycle(4)).unwrap(), "Cl");
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(b">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn malformed() {
        // five vertices need two data bytes
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(parse_graph6(b""), Err(Error::Graph6 { .. })));
        // 'A' + 0b100001: the padding bit is set
        assert!(matches!(
            parse_graph6(&[b'A', 63 + 0b100001]),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(b"A_?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6(&[b'A', 10]),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(parse_graph6(b"~???").is_err());
    }

    proptest! {
        #[test]
        fn encode_decode_roundtrip(n in 1usize..20, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let text = to_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
        }
    }
}
