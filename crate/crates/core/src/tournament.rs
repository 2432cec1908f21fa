use serde::{Deserialize, Serialize};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};
use crate::numbering::Numbering;

pub const MAX_VERTICES: usize = 64;

/// A tournament on vertices `0..n`.
///
/// Row `i` of `out` is the out-neighbourhood of `i`. Construction validates
/// that the relation is irreflexive and that every pair of distinct vertices
/// is oriented exactly once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tournament {
    n: usize,
    out: Vec<u64>,
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament({}; ", self.n)?;
        f.debug_list().entries(self.arcs().map(|(a, b)| (a + 1, b + 1))).finish()?;
        write!(f, ")")
    }
}

impl Tournament {
    /// Validates raw out-neighbourhood rows.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        let full = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidEdge(i, (row & !full).trailing_zeros() as usize));
            }
            if row & bit(i) != 0 {
                return Err(Error::ReflexivePair(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let ij = rows[i] & bit(j) != 0;
                let ji = rows[j] & bit(i) != 0;
                if ij == ji {
                    return Err(Error::AsymmetryViolation(i, j));
                }
            }
        }
        Ok(Tournament { n, out: rows })
    }

    /// Builds from a predicate on ordered pairs of 0-based vertices.
    pub fn from_fn(n: usize, beats: impl Fn(usize, usize) -> bool) -> Result<Self> {
        check_size(n)?;
        let mut rows = vec![0u64; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                if beats(i, j) {
                    *row |= bit(j);
                }
            }
        }
        Self::from_rows(rows)
    }

    /// Builds from a complete list of arcs `(winner, loser)` with 1-based labels.
    pub fn from_arcs_1based(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut rows = vec![0u64; n];
        for &(a, b) in arcs {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidEdge(a, b));
            }
            rows[a - 1] |= bit(b - 1);
        }
        Self::from_rows(rows)
    }

    /// The transitive tournament where `i` beats `j` iff `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| i < j)
    }

    /// Builds from the upper-triangle bits, `code` bit for pair `(i, j)` set iff
    /// `i` beats `j`. Pairs are visited row-major and the first pair is the most
    /// significant of the `n(n-1)/2` bits.
    pub fn from_upper_code(n: usize, code: u64) -> Result<Self> {
        check_size(n)?;
        let pairs = n * (n - 1) / 2;
        if pairs > 64 {
            return Err(Error::TooLarge {
                what: "upper-triangle code",
                n,
                limit: 11,
            });
        }
        let mut rows = vec![0u64; n];
        let mut k = pairs;
        for i in 0..n {
            for j in i + 1..n {
                k -= 1;
                if code >> k & 1 == 1 {
                    rows[i] |= bit(j);
                } else {
                    rows[j] |= bit(i);
                }
            }
        }
        Ok(Tournament { n, out: rows })
    }

    /// Inverse of [`Tournament::from_upper_code`]; only defined for `n <= 11`.
    pub fn upper_code(&self) -> u64 {
        let mut code = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | u64::from(self.beats(i, j));
            }
        }
        code
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.out[i] >> j & 1 == 1
    }

    #[inline]
    pub fn out_set(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// In-neighbourhood of `v`.
    #[inline]
    pub fn in_set(&self, v: usize) -> u64 {
        low_mask(self.n) & !self.out[v] & !bit(v)
    }

    pub fn rows(&self) -> &[u64] {
        &self.out
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    /// Arcs `(winner, loser)`, 0-based, ordered by winner then loser.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| Bits(self.out[i]).map(move |j| (i, j)))
    }

    /// Every arc reversed.
    pub fn reverse(&self) -> Tournament {
        let out = (0..self.n).map(|v| self.in_set(v)).collect();
        Tournament { n: self.n, out }
    }

    /// The tournament on positions `0..n` where position `p` carries vertex `numbering[p]`.
    pub fn relabel(&self, numbering: &Numbering) -> Result<Tournament> {
        if numbering.len() != self.n {
            return Err(Error::NumberingSizeMismatch {
                expected: self.n,
                found: numbering.len(),
            });
        }
        let perm = numbering.as_slice();
        let mut out = vec![0u64; self.n];
        for (p, row) in out.iter_mut().enumerate() {
            for q in 0..self.n {
                if self.beats(perm[p], perm[q]) {
                    *row |= bit(q);
                }
            }
        }
        Ok(Tournament { n: self.n, out })
    }

    /// Subtournament induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Tournament> {
        Tournament::from_fn(vertices.len(), |a, b| self.beats(vertices[a], vertices[b]))
    }

    /// Deletes one vertex, keeping the remaining labels in increasing order.
    pub fn delete_vertex(&self, v: usize) -> Result<Tournament> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Adds a vertex `n` whose out-neighbourhood is `out_neighbours`.
    pub fn extend(&self, out_neighbours: u64) -> Result<Tournament> {
        let n = self.n + 1;
        check_size(n)?;
        let new = self.n;
        let mut out: Vec<u64> = self.out.clone();
        for (v, row) in out.iter_mut().enumerate() {
            if out_neighbours & bit(v) == 0 {
                *row |= bit(new);
            }
        }
        out.push(out_neighbours & low_mask(self.n));
        Tournament::from_rows(out)
    }

    /// A tournament is transitive iff its score sequence is `0, 1, ..., n-1`.
    pub fn is_transitive(&self) -> bool {
        is_transitive_on(self, self.vertex_mask())
    }
}

/// True iff the subtournament induced on `set` has no cyclic triangle.
pub fn is_transitive_on(t: &Tournament, set: u64) -> bool {
    let mut seen = 0u64;
    for v in Bits(set) {
        let d = (t.out_set(v) & set).count_ones();
        if seen & bit(d as usize) != 0 {
            return false;
        }
        seen |= bit(d as usize);
    }
    true
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::SizeOutOfRange(n))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex() {
        let t = Tournament::from_arcs_1based(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert!(t.is_transitive());
    }

    #[test]
    fn cyclic_triangle() {
        let t = Tournament::from_arcs_1based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(t.beats(0, 1) && t.beats(1, 2) && t.beats(2, 0));
        assert!(!t.is_transitive());
    }

    #[test]
    fn both_directions_rejected() {
        let err = Tournament::from_arcs_1based(2, &[(1, 2), (2, 1)]).unwrap_err();
        assert_eq!(err, Error::AsymmetryViolation(0, 1));
        let err = Tournament::from_arcs_1based(2, &[]).unwrap_err();
        assert_eq!(err, Error::AsymmetryViolation(0, 1));
    }

    #[test]
    fn reflexive_and_size_errors() {
        assert_eq!(
            Tournament::from_rows(vec![0b1]).unwrap_err(),
            Error::ReflexivePair(0)
        );
        assert_eq!(
            Tournament::from_rows(vec![]).unwrap_err(),
            Error::SizeOutOfRange(0)
        );
        assert_eq!(
            Tournament::transitive(65).unwrap_err(),
            Error::SizeOutOfRange(65)
        );
    }

    #[test]
    fn reverse_of_transitive() {
        let t = Tournament::transitive(3).unwrap().reverse();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.beats(i, j), i > j);
            }
        }
    }

    #[test]
    fn upper_code_round_trip() {
        for n in 1..=5 {
            let pairs = n * (n - 1) / 2;
            for code in 0..(1u64 << pairs) {
                let t = Tournament::from_upper_code(n, code).unwrap();
                assert_eq!(t.upper_code(), code);
            }
        }
    }

    #[test]
    fn extend_sets_both_directions() {
        let t = Tournament::transitive(3).unwrap().extend(0b010).unwrap();
        assert!(t.beats(3, 1));
        assert!(t.beats(0, 3) && t.beats(2, 3));
    }
}
