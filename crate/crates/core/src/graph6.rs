//! graph6 encoding and decoding.
//!
//! Header is one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! bytes holding `n` in big-endian 6-bit groups. The body lists the upper
//! triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), padded
//! with zero bits to a multiple of six.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 header announces {0} vertices, above the bound of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        let row = g.neighbors(v);
        for u in 0..v {
            acc = (acc << 1) | ((row >> u) & 1) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    // every byte is in 63..=126, which is ASCII
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { byte, offset });
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength { expected: 4, found: bytes.len() });
        }
        if bytes[1] == 126 {
            // 8-byte header, always beyond the bound
            return Err(Graph6Error::TooManyVertices(1 << 18));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength { expected, found: body.len() });
    }
    let mut g = Graph::empty(n).expect("bounded above");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert(u, v);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // reference strings from the format description
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::cycle(5)), "Dhc");
        let petersen_like = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&petersen_like), "DQc");
        assert_eq!(decode("DQc").unwrap(), petersen_like);
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(63);
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
        let g64 = Graph::complete(64);
        assert_eq!(decode(&encode(&g64)).unwrap(), g64);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("C~ "), Err(Graph6Error::InvalidByte { offset: 2, .. })));
        assert!(matches!(decode("C\u{7f}"), Err(Graph6Error::InvalidByte { .. })));
        assert!(matches!(decode("C~~"), Err(Graph6Error::WrongLength { .. })));
        // K3 uses three bits; a set padding bit is rejected
        assert_eq!(decode("Bw"), Ok(Graph::complete(3)));
        assert_eq!(decode("Bx"), Err(Graph6Error::NonzeroPadding));
        assert!(matches!(decode("~?@@"), Err(Graph6Error::TooManyVertices(65))));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..20, seed in any::<u64>()) {
            let mut g = Graph::empty(n).unwrap();
            let mut x = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { g.insert(u, v); }
                }
            }
            let s = encode(&g);
            prop_assert_eq!(decode(&s).unwrap(), g);
            prop_assert_eq!(encode(&decode(&s).unwrap()), s);
        }
    }
}
