//! Short-form graph6: one order byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column-major order, six bits per byte, each byte `+ 63`.

use ramsey_core::Graph;
use thiserror::Error;

/// Largest order the short form can carry.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 input is empty")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("order byte at offset 0 selects the long form, which is not supported")]
    LongForm,
    #[error("expected {expected} bytes for a graph on {order} vertices, found {found} (offset {offset})")]
    Length {
        order: usize,
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("padding bits in the last byte (offset {offset}) are not zero")]
    Padding { offset: usize },
    #[error("graph has {0} vertices; graph6 short form allows at most 62")]
    TooLarge(usize),
}

impl Graph6Error {
    /// Byte offset the error refers to, when it has one.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::BadByte { offset, .. }
            | Graph6Error::Length { offset, .. }
            | Graph6Error::Padding { offset } => Some(offset),
            Graph6Error::LongForm => Some(0),
            Graph6Error::Empty | Graph6Error::TooLarge(_) => None,
        }
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 string. Surrounding whitespace is ignored.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim().as_bytes();
    let (&first, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::BadByte {
            offset: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset: i + 1,
            byte: body[i],
        });
    }
    let expected = body_len(n);
    if body.len() != expected {
        let offset = 1 + body.len().min(expected);
        return Err(Graph6Error::Length {
            order: n,
            expected,
            found: body.len(),
            offset,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let spare = expected * 6 - pairs;
    if spare > 0 && (body[expected - 1] - 63) & ((1 << spare) - 1) != 0 {
        return Err(Graph6Error::Padding { offset: expected });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &edges).expect("decoded pairs are distinct and in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k2 = Graph::path(2).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        assert_eq!(encode(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
        // C4 on 0-1-2-3-0: bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 101101
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(encode(&c4).unwrap(), "Cl");
        assert_eq!(decode(&encode(&c4).unwrap()).unwrap(), c4);
        // the Petersen graph as published by standard tools
        let petersen = decode("IheA@GUAo").unwrap();
        assert_eq!((petersen.vertex_count(), petersen.edge_count()), (10, 15));
        assert!((0..10).all(|v| petersen.degree(v) == 3));
    }

    #[test]
    fn errors_carry_offsets() {
        let e = decode("garbage\x01").unwrap_err();
        assert_eq!(e, Graph6Error::BadByte { offset: 7, byte: 1 });
        assert_eq!(decode("").unwrap_err(), Graph6Error::Empty);
        assert_eq!(decode("~??").unwrap_err().offset(), Some(0));
        assert_eq!(decode(" ").unwrap_err(), Graph6Error::Empty);
        assert!(matches!(
            decode("C"),
            Err(Graph6Error::Length {
                expected: 1,
                found: 0,
                offset: 1,
                ..
            })
        ));
        assert!(matches!(
            decode("Cl?"),
            Err(Graph6Error::Length { offset: 2, .. })
        ));
        // n = 3 uses three of six bits; the low three must be zero
        assert_eq!(decode("Bw").unwrap().edge_count(), 3);
        assert_eq!(
            decode("Bx").unwrap_err(),
            Graph6Error::Padding { offset: 1 }
        );
        let big = Graph::empty(63).unwrap();
        assert_eq!(encode(&big).unwrap_err(), Graph6Error::TooLarge(63));
    }
}
