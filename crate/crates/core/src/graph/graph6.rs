//! graph6 encoding.
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix,
//! read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed into
//! 6-bit groups with the most significant bit first, each group offset by 63
//! and the final group zero-padded.
//!
//! Only canonical records are accepted: the length header must use the
//! shortest form for `n`, and padding bits must be zero. Under that rule
//! [`write_graph6`] and [`parse_graph6`] are mutually inverse.

use super::Graph;
use crate::error::Graph6Error;

/// Largest vertex count representable with the 4-byte header.
pub const MAX_VERTICES: usize = 258_047;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 record. A leading `>>graph6<<` marker and trailing
/// line terminators are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter {
            offset: skip + pos,
            byte: body[pos],
        });
    }

    let (n, header_len) = decode_header(body).map_err(|(offset, reason)| Graph6Error::BadHeader {
        offset: skip + offset,
        reason,
    })?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            offset: skip + header_len,
            expected,
            found: data.len(),
        });
    }
    if let Some(&last) = data.last() {
        let pad = expected * 6 - bits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: skip + body.len() - 1,
            });
        }
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

fn decode_header(body: &[u8]) -> Result<(usize, usize), (usize, &'static str)> {
    let value = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if body[0] != 126 {
        return Ok(((body[0] - 63) as usize, 1));
    }
    if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err((body.len(), "truncated 8-byte header"));
        }
        let n = value(&body[2..8]);
        if n <= MAX_VERTICES {
            return Err((0, "non-canonical 8-byte header"));
        }
        return Ok((n, 8));
    }
    if body.len() < 4 {
        return Err((body.len(), "truncated 4-byte header"));
    }
    let n = value(&body[1..4]);
    if n <= 62 {
        return Err((0, "non-canonical 4-byte header"));
    }
    Ok((n, 4))
}

/// Encodes a graph as a canonical graph6 record (no header marker, no newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            126,
            (n >> 12 & 63) as u8 + 63,
            (n >> 6 & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    };
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k2_round_trip() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert_eq!(write_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn null_graph() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
    }

    #[test]
    fn five_vertex_record() {
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn header_marker_and_newline_are_stripped() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn errors_name_byte_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::BadCharacter { offset: 1, byte: b' ' })
        );
        assert_eq!(
            parse_graph6(">>graph6<<A\x7f"),
            Err(Graph6Error::BadCharacter { offset: 11, byte: 0x7f })
        );
        assert!(matches!(
            parse_graph6("A__"),
            Err(Graph6Error::BadLength { offset: 1, expected: 1, found: 2 })
        ));
        // "A" needs one body byte; "A`" sets padding bit 5.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonzeroPadding { offset: 1 }));
        assert!(matches!(parse_graph6("~??"), Err(Graph6Error::BadHeader { .. })));
        // 4-byte form for n = 2 is not canonical.
        assert!(matches!(parse_graph6("~??A_"), Err(Graph6Error::BadHeader { offset: 0, .. })));
    }

    #[test]
    fn long_header() {
        let g = Graph::from_fn(70, |u, v| (u + v) % 3 == 0);
        let s = write_graph6(&g).unwrap();
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn too_large_for_writer() {
        let g = Graph::empty(MAX_VERTICES + 1);
        assert!(matches!(write_graph6(&g), Err(Graph6Error::TooLarge { .. })));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..80).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if it.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_write(g in arb_graph()) {
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }

        #[test]
        fn write_inverts_parse_on_valid_records(n in 0usize..70, seed in any::<u64>()) {
            let g = Graph::from_fn(n, |u, v| (seed >> ((u * 7 + v) % 64)) & 1 == 1);
            let s = write_graph6(&g).unwrap();
            prop_assert_eq!(write_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
        }
    }
}
