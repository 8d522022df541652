//! The graph6 interchange format: 6-bit chunks of the upper-triangular
//! adjacency matrix, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes.first() {
        None => Err(Error::Malformed("empty graph6 string".into())),
        Some(&b) if b == 126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                if bytes.len() < 8 {
                    return Err(Error::Malformed("truncated graph6 size field".into()));
                }
                let mut n = 0usize;
                for &c in &bytes[2..8] {
                    if !(63..=126).contains(&c) {
                        return Err(Error::Malformed("invalid graph6 size byte".into()));
                    }
                    n = n << 6 | (c as usize - 63);
                }
                Ok((n, 8))
            } else {
                if bytes.len() < 4 {
                    return Err(Error::Malformed("truncated graph6 size field".into()));
                }
                let mut n = 0usize;
                for &c in &bytes[1..4] {
                    if !(63..=126).contains(&c) {
                        return Err(Error::Malformed("invalid graph6 size byte".into()));
                    }
                    n = n << 6 | (c as usize - 63);
                }
                Ok((n, 4))
            }
        }
        Some(&b) if (63..126).contains(&b) => Ok((b as usize - 63, 1)),
        Some(&b) => Err(Error::Malformed(format!("invalid graph6 byte {b}"))),
    }
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.trim_end().as_bytes();
    let (n, offset) = parse_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let payload = &bytes[offset..];
    if payload.len() != nbytes {
        return Err(Error::Malformed(format!(
            "graph6 payload for n={n} needs {nbytes} bytes, found {}",
            payload.len()
        )));
    }
    let mut bits = Vec::with_capacity(nbits);
    for &c in payload {
        if !(63..=126).contains(&c) {
            return Err(Error::Malformed(format!("invalid graph6 payload byte {c}")));
        }
        let x = c - 63;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    // Columnwise upper triangle: bit order (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    SimpleGraph::from_edge_list(n, &edges)
}

pub fn emit_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for k in [2, 1, 0] {
            out.push((n >> (6 * k) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for k in [5, 4, 3, 2, 1, 0] {
            out.push((n >> (6 * k) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = x << 1 | b as u8;
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    #[test]
    fn known_codes_cross_checked() {
        // expected adjacency frozen from an independent graph6 decoder
        let cases: &[(&str, usize, &[(usize, usize)])] = &[
            ("D?{", 5, &[(0, 4), (1, 4), (2, 4), (3, 4)]),
            ("Bw", 3, &[(0, 1), (0, 2), (1, 2)]),
            ("A?", 2, &[]),
            ("A_", 2, &[(0, 1)]),
            ("Bg", 3, &[(0, 1), (1, 2)]),
            ("C{", 4, &[(0, 1), (0, 2), (0, 3), (1, 2)]),
            ("D]C", 5, &[(0, 2), (0, 3), (1, 2), (1, 3), (3, 4)]),
            ("DG_", 5, &[(0, 4), (1, 2)]),
            ("EDKo", 6, &[(0, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)]),
            ("EIEG", 6, &[(0, 5), (1, 2), (1, 3), (3, 4), (4, 5)]),
            (
                "FwVfG",
                7,
                &[
                    (0, 1), (0, 2), (0, 5), (0, 6), (1, 2), (1, 4), (1, 5), (1, 6), (2, 5),
                    (2, 6), (3, 4), (5, 6),
                ],
            ),
            (
                "GcD{Kc",
                8,
                &[
                    (0, 1), (0, 3), (0, 6), (0, 7), (1, 5), (2, 5), (3, 4), (3, 5), (3, 7),
                    (4, 5), (5, 6), (6, 7),
                ],
            ),
            (
                "IsP@OkWHG",
                10,
                &[
                    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 9), (3, 7), (3, 8),
                    (4, 6), (4, 8), (5, 7), (5, 9), (6, 7), (8, 9),
                ],
            ),
        ];
        for &(s, n, edges) in cases {
            let g = parse_graph6(s).unwrap();
            assert_eq!(g.n(), n, "vertex count for {s}");
            assert_eq!(g.edges(), edges, "edges for {s}");
            assert_eq!(emit_graph6(&g), s, "round trip for {s}");
        }
    }

    #[test]
    fn empty_and_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err()); // truncated payload
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn round_trips() {
        for g in [
            graph::petersen(),
            graph::path(7),
            graph::cycle(9),
            graph::complete(5),
            graph::SimpleGraph::empty(0),
            graph::SimpleGraph::empty(62),
            graph::path(63), // long form
        ] {
            let s = emit_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn complete3_code() {
        // K3 upper triangle bits 111 -> padded 111000 -> 'w'
        assert_eq!(emit_graph6(&graph::complete(3)), "Bw");
    }
}
