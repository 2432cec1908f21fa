use serde::{Deserialize, Serialize};

use crate::bits::bit;
use crate::error::{Error, Result};

/// `perm[p]` is the vertex placed at position `p` (both 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Numbering(Vec<usize>);

impl Numbering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        if n > 64 {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut seen = 0u64;
        for &v in &perm {
            if v >= n || seen & bit(v) != 0 {
                return Err(Error::NotAPermutation(v));
            }
            seen |= bit(v);
        }
        Ok(Numbering(perm))
    }

    /// Parses 1-based vertex labels.
    pub fn from_1based(labels: &[usize]) -> Result<Self> {
        let perm = labels
            .iter()
            .map(|&v| v.checked_sub(1).ok_or(Error::NotAPermutation(0)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(perm)
    }

    pub fn identity(n: usize) -> Self {
        Numbering((0..n).collect())
    }

    pub fn reversed(&self) -> Self {
        Numbering(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn to_1based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// `position[v]` for every vertex `v`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (p, &v) in self.0.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations {
            next: Some((0..n).collect()),
        }
    }
}

impl TryFrom<Vec<usize>> for Numbering {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Numbering::new(v)
    }
}

impl From<Numbering> for Vec<usize> {
    fn from(n: Numbering) -> Self {
        n.0
    }
}

pub struct LexPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Numbering;

    fn next(&mut self) -> Option<Numbering> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Numbering(cur))
    }
}

/// Advances to the lexicographic successor. After the last permutation it
/// wraps to the first and returns false.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}
