//! Small helpers for `u64` vertex sets.

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_in_order() {
        assert_eq!(to_vec(0b1011_0001), vec![0, 4, 5, 7]);
        assert_eq!(Bits(u64::MAX).count(), 64);
        assert_eq!(low_mask(64), u64::MAX);
        assert_eq!(low_mask(3), 7);
    }
}
