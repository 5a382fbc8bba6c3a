//! graph6 encoding and decoding.
//!
//! Bytes are printable ASCII in `63..=126`. The vertex count is a single byte
//! `n + 63` for `n <= 62`, or `126` followed by three 6-bit big-endian groups
//! for `n <= 258047`. The upper triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable with the short and 3-byte size fields.
pub const MAX_VERTICES: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 string without header or trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + bits.div_ceil(6));
    encode_size(n, &mut out);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if body.is_empty() {
        return Err(Error::BadHeader("empty input".into()));
    }
    if let Some((position, &byte)) = body
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Error::InvalidChar { position, byte });
    }

    let (n, rest) = if body[0] != 126 {
        ((body[0] - 63) as usize, &body[1..])
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(Error::BadHeader("truncated 6-byte size field".into()));
        }
        let n = body[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        return Err(if n > MAX_VERTICES {
            Error::TooLarge {
                n,
                limit: MAX_VERTICES,
            }
        } else {
            Error::BadHeader(format!("n = {n} must use a shorter size field"))
        });
    } else {
        if body.len() < 4 {
            return Err(Error::BadHeader("truncated 3-byte size field".into()));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::BadHeader(format!(
                "n = {n} must use the single-byte size field"
            )));
        }
        (n, &body[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() < needed {
        return Err(Error::TruncatedBits {
            expected: bits,
            found: rest.len() * 6,
        });
    }
    if rest.len() > needed {
        return Err(Error::BadHeader(format!(
            "{} trailing bytes after adjacency data",
            rest.len() - needed
        )));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Expected strings below were produced by an independent decoder
    // (networkx) and frozen.

    #[test]
    fn decodes_star_example() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn decodes_mixed_example() {
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 4), (1, 3), (3, 4)]
        );
    }

    #[test]
    fn small_cases() {
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));

        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(write_graph6(&k2).unwrap(), "A_");

        assert_eq!(write_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn header_is_tolerated() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn cycle_and_complete() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(write_graph6(&c4).unwrap(), "Cl");
        assert_eq!(parse_graph6("Cl").unwrap(), c4);
        let k5 =
            Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        assert_eq!(write_graph6(&k5).unwrap(), "D~{");
    }

    #[test]
    fn long_size_field() {
        let p = Graph::from_edges(63, (1..63).map(|i| (i - 1, i))).unwrap();
        let s = write_graph6(&p).unwrap();
        assert!(s.starts_with("~??~hCGGC@?G?_"));
        assert_eq!(parse_graph6(&s).unwrap(), p);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_graph6("A!"),
            Err(Error::InvalidChar {
                position: 1,
                byte: b'!'
            })
        ));
        assert!(matches!(
            parse_graph6("D?"),
            Err(Error::TruncatedBits { .. })
        ));
        assert!(matches!(parse_graph6(""), Err(Error::BadHeader(_))));
        assert!(matches!(parse_graph6("~?"), Err(Error::BadHeader(_))));
        assert!(matches!(parse_graph6("A__"), Err(Error::BadHeader(_))));
        assert!(matches!(
            parse_graph6("~~?@????"),
            Err(Error::TooLarge { n: 16_777_216, .. })
        ));
        assert!(matches!(parse_graph6("~~??????"), Err(Error::BadHeader(_))));
    }
}
