//! The graph6 format: the order `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte
//! (value + 63), most significant bit first, zero padded.

use dompoly_core::{Graph, HARD_MAX_N};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 character {byte:#04x} at offset {offset}")]
    InvalidChar { byte: u8, offset: usize },
    #[error("graph6 data truncated: {n} vertices need {needed} data bytes, found {found}")]
    Truncated {
        n: usize,
        needed: usize,
        found: usize,
    },
    #[error("graph6 data has {extra} trailing byte(s)")]
    Trailing { extra: usize },
    #[error("graph6 order {n} is above the limit of {max}")]
    TooLarge { n: usize, max: usize },
}

fn six_bits(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    bytes.iter().enumerate().try_fold(0u64, |acc, (i, &b)| {
        if (63..=126).contains(&b) {
            Ok(acc << 6 | u64::from(b - 63))
        } else {
            Err(Graph6Error::InvalidChar {
                byte: b,
                offset: offset + i,
            })
        }
    })
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let start = line.len() - line.trim_start().len();
    let mut text = line.trim();
    let mut offset = start;
    if let Some(rest) = text.strip_prefix(HEADER) {
        text = rest;
        offset += HEADER.len();
    }
    let bytes = text.as_bytes();
    let (n, header_len) = match bytes {
        [] => return Err(Graph6Error::Empty),
        [126, 126, ..] => {
            let digits = bytes.get(2..8).ok_or(Graph6Error::Truncated {
                n: 0,
                needed: 8,
                found: bytes.len(),
            })?;
            (six_bits(digits, offset + 2)? as usize, 8)
        }
        [126, ..] => {
            let digits = bytes.get(1..4).ok_or(Graph6Error::Truncated {
                n: 0,
                needed: 4,
                found: bytes.len(),
            })?;
            (six_bits(digits, offset + 1)? as usize, 4)
        }
        [b, ..] => (six_bits(&[*b], offset)? as usize, 1),
    };
    if n > HARD_MAX_N {
        return Err(Graph6Error::TooLarge { n, max: HARD_MAX_N });
    }

    let data = &bytes[header_len..];
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if data.len() < needed {
        return Err(Graph6Error::Truncated {
            n,
            needed,
            found: data.len(),
        });
    }
    if data.len() > needed {
        return Err(Graph6Error::Trailing {
            extra: data.len() - needed,
        });
    }

    let mut g = Graph::empty(n).expect("order checked");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidChar {
                    byte,
                    offset: offset + header_len + k / 6,
                });
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("each pair appears once");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph without the optional header.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use dompoly_core::generate::labeled_graphs;
    use proptest::prelude::*;

    #[test]
    fn reference_strings() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0).unwrap());
        // 'r' = 51 = 110011: pairs 01, 02, 13, 23
        let c4 = parse_graph6("Cr").unwrap();
        assert_eq!(
            c4,
            Graph::from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
        );
        assert_eq!(encode_graph6(&c4), "Cr");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        // P4 as 0-1-2-3: pairs 01, 12, 23 -> bits 101001 = 41
        assert_eq!(encode_graph6(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(encode_graph6(&Graph::complete(5).unwrap()), "D~{");
    }

    #[test]
    fn header_and_whitespace_are_ignored() {
        assert_eq!(
            parse_graph6(">>graph6<<C~\n").unwrap(),
            Graph::complete(4).unwrap()
        );
        assert_eq!(parse_graph6("  C~ ").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated {
                n: 4,
                needed: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::Trailing { extra: 1 }));
        assert_eq!(
            parse_graph6("C "),
            Err(Graph6Error::Truncated {
                n: 4,
                needed: 1,
                found: 0
            })
        );
        assert_eq!(
            parse_graph6("C\u{7f}"),
            Err(Graph6Error::InvalidChar {
                byte: 0x7f,
                offset: 1
            })
        );
        // n = 33 fits in one byte but not in a vertex set
        assert_eq!(
            parse_graph6("`"),
            Err(Graph6Error::TooLarge { n: 33, max: 32 })
        );
        assert_eq!(
            parse_graph6("~?B?"),
            Err(Graph6Error::TooLarge { n: 192, max: 32 })
        );
        assert!(matches!(
            parse_graph6("~?"),
            Err(Graph6Error::Truncated { .. })
        ));
    }

    #[test]
    fn every_five_vertex_graph_round_trips() {
        for g in labeled_graphs(5) {
            assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=32, bits in prop::collection::vec(any::<bool>(), 496)) {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            prop_assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
