//! graph6 encoding of simple graphs.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &[u8] = b">>graph6<<";
/// Largest order representable in graph6 (36-bit size field).
const MAX_ORDER: u64 = (1 << 36) - 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("truncated bitstream: expected {expected} data bytes, found {found}")]
    TruncatedBitstream { expected: u64, found: usize },
    #[error("invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("nonzero padding bits")]
    NonZeroPadding,
    #[error("{0} trailing bytes after the edge data")]
    TrailingBytes(usize),
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and one trailing
/// newline are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = bytes;
    let mut base = 0;
    if data.starts_with(b">>") {
        if !data.starts_with(HEADER) {
            return Err(Graph6Error::MalformedHeader("unknown >> header".into()));
        }
        data = &data[HEADER.len()..];
        base = HEADER.len();
    }
    if let Some(d) = data.strip_suffix(b"\n") {
        data = d.strip_suffix(b"\r").unwrap_or(d);
    }
    if let Some(offset) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            offset: base + offset,
            byte: data[offset],
        });
    }
    let (n, rest) = decode_order(data)?;
    let bits = n as u128 * (n as u128).saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if (rest.len() as u128) < needed {
        return Err(Graph6Error::TruncatedBitstream {
            expected: needed as u64,
            found: rest.len(),
        });
    }
    if rest.len() as u128 > needed {
        return Err(Graph6Error::TrailingBytes(rest.len() - needed as usize));
    }
    let n = n as usize;
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    for p in k..rest.len() * 6 {
        if bit(p) {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 edges are simple"))
}

fn decode_order(data: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let malformed = |m: &str| Err(Graph6Error::MalformedHeader(m.into()));
    let v = |b: u8| (b - 63) as u64;
    let fold = |bs: &[u8]| bs.iter().fold(0u64, |acc, &b| acc << 6 | v(b));
    match data {
        [] => malformed("empty record"),
        [b, rest @ ..] if *b != 126 => Ok((v(*b), rest)),
        [_, 126, rest @ ..] => {
            if rest.len() < 6 {
                return malformed("truncated 36-bit size field");
            }
            let n = fold(&rest[..6]);
            if !(258048..=MAX_ORDER).contains(&n) {
                return malformed("non-canonical size field");
            }
            Ok((n, &rest[6..]))
        }
        [_, rest @ ..] => {
            if rest.len() < 3 {
                return malformed("truncated 18-bit size field");
            }
            let n = fold(&rest[..3]);
            if n < 63 {
                return malformed("non-canonical size field");
            }
            Ok((n, &rest[3..]))
        }
    }
}

/// Canonical graph6 encoding without header or newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.num_vertices();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258048 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push((n >> s & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64) >> s & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        assert_eq!(parse_graph6(b"?").unwrap().num_vertices(), 0);
        let one = parse_graph6(b"@").unwrap();
        assert_eq!((one.num_vertices(), one.num_edges()), (1, 0));
        assert_eq!(write_graph6(&Graph::empty(0)), b"?");
        assert_eq!(write_graph6(&Graph::complete(2)), b"A_");
        assert_eq!(parse_graph6(b"A_\n").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(b">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn known_encodings() {
        // Edge bits of P5 are 101001 0001(00).
        assert_eq!(write_graph6(&Graph::path(5)), b"DhC");
        assert_eq!(write_graph6(&Graph::complete(4)), b"C~");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_graph6(b" "),
            Err(Graph6Error::InvalidByte {
                offset: 0,
                byte: 0x20
            })
        );
        assert!(matches!(
            parse_graph6(b""),
            Err(Graph6Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph6(b">>sparse6<<A_"),
            Err(Graph6Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph6(b"C"),
            Err(Graph6Error::TruncatedBitstream { .. })
        ));
        assert_eq!(parse_graph6(b"A__"), Err(Graph6Error::TrailingBytes(1)));
        assert_eq!(parse_graph6(b"A`"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(
            parse_graph6(b"~???"),
            Err(Graph6Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_graph6(b"~~"),
            Err(Graph6Error::MalformedHeader(_))
        ));
    }

    #[test]
    fn long_form_round_trip() {
        let g = Graph::cycle(70);
        let enc = write_graph6(&g);
        assert_eq!(enc[0], 126);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }
}
