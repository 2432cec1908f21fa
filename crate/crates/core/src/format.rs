//! Line-oriented text format.
//!
//! ```text
//! tournament <n>
//! <hex>
//! ```
//!
//! The hex string packs the upper-triangle bits `b_ij` (`i < j`, row-major)
//! most significant bit first, zero-padded at the end to a whole digit. For a
//! tournament `b_ij = 1` iff `i` beats `j`; the header `ordered <n>` uses the
//! same packing with `b_ij = 1` iff `i` and `j` are adjacent.

use std::fmt::Write as _;

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::ordered::OrderedGraph;
use crate::tournament::Tournament;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Tournament(Tournament),
    Ordered(OrderedGraph),
}

fn pack(n: usize, bit_at: impl Fn(usize, usize) -> bool) -> String {
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(bit_at(i, j));
        }
    }
    let mut out = String::with_capacity(bits.len().div_ceil(4));
    for chunk in bits.chunks(4) {
        let mut d = 0u32;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                d |= 8 >> k;
            }
        }
        write!(out, "{d:x}").expect("writing to a String");
    }
    out
}

fn unpack(n: usize, hex: &str) -> Result<Vec<bool>> {
    let m = n * n.saturating_sub(1) / 2;
    let hex = hex.trim();
    if hex.len() != m.div_ceil(4) {
        return Err(Error::Parse(format!(
            "expected {} hex digits for n={n}, found {}",
            m.div_ceil(4),
            hex.len()
        )));
    }
    let mut bits = Vec::with_capacity(m);
    for c in hex.chars() {
        let d = c
            .to_digit(16)
            .ok_or_else(|| Error::Parse(format!("not a hex digit: {c:?}")))?;
        for k in 0..4 {
            bits.push(d & (8 >> k) != 0);
        }
    }
    if bits[m..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero padding bits".into()));
    }
    bits.truncate(m);
    Ok(bits)
}

pub fn tournament_to_text(t: &Tournament) -> String {
    format!("tournament {}\n{}\n", t.n(), pack(t.n(), |i, j| t.beats(i, j)))
}

pub fn ordered_to_text(g: &OrderedGraph) -> String {
    format!("ordered {}\n{}\n", g.n(), pack(g.n(), |i, j| g.adjacent(i, j)))
}

pub fn parse(text: &str) -> Result<Object> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
    if words.next().is_some() {
        return Err(Error::Parse(format!("bad header: {header:?}")));
    }
    if n == 0 || n > 64 {
        return Err(Error::SizeOutOfRange(n));
    }
    let body = lines.next().unwrap_or("");
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines".into()));
    }
    let bits = unpack(n, body)?;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            match (kind, bits[k]) {
                ("tournament", true) | ("ordered", true) => rows[i] |= bit(j),
                _ => {}
            }
            match (kind, bits[k]) {
                ("tournament", false) | ("ordered", true) => rows[j] |= bit(i),
                _ => {}
            }
            k += 1;
        }
    }
    match kind {
        "tournament" => Ok(Object::Tournament(Tournament::from_rows(rows)?)),
        "ordered" => Ok(Object::Ordered(OrderedGraph::from_rows(rows)?)),
        other => Err(Error::Parse(format!("unknown object kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_triangle_text() {
        let t = Tournament::from_arcs_1based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        // b12=1, b13=0, b23=1 -> 101 + pad -> 0xa
        assert_eq!(tournament_to_text(&t), "tournament 3\na\n");
        assert_eq!(parse("tournament 3\na\n"), Ok(Object::Tournament(t)));
    }

    #[test]
    fn single_vertex_has_empty_body() {
        let t = Tournament::transitive(1).unwrap();
        assert_eq!(tournament_to_text(&t), "tournament 1\n\n");
        assert_eq!(parse("tournament 1\n"), Ok(Object::Tournament(t)));
    }

    #[test]
    fn ordered_round_trip() {
        let g = OrderedGraph::from_edges_1based(5, &[(1, 4), (1, 5), (2, 5)]).unwrap();
        assert_eq!(parse(&ordered_to_text(&g)), Ok(Object::Ordered(g)));
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse("").is_err());
        assert!(parse("tournament 3\nab\n").is_err());
        assert!(parse("tournament 3\nb\n").is_err());
        assert!(parse("digraph 3\na\n").is_err());
        assert!(parse("tournament 0\n").is_err());
        assert!(parse("tournament 3\nz\n").is_err());
    }
}
