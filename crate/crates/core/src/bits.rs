//! Small helpers for `u64` vertex sets.

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn count(mask: u64) -> usize {
    mask.count_ones() as usize
}

pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |m, v| m | bit(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn iterates_in_order() {
        let v: Vec<usize> = Bits(0b1010_0110).collect();
        assert_eq!(v, [1, 2, 5, 7]);
        assert_eq!(Bits(u64::MAX).count(), 64);
        assert_eq!(low_mask(64), u64::MAX);
        assert_eq!(low_mask(3), 7);
        assert_eq!(from_iter([0, 63]), 1 | (1 << 63));
    }
}
