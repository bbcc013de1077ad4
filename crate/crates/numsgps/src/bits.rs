//! A minimal growable bit vector used for membership tables.
//!
//! Bits beyond `len` are kept zero so that equality and hashing can work
//! directly on the word storage.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    /// All-zero bit vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    /// Number of set bits in `0..end`.
    pub fn count_ones_below(&self, end: usize) -> usize {
        assert!(end <= self.len);
        let full = end / 64;
        let mut n: usize = self.words[..full].iter().map(|w| w.count_ones() as usize).sum();
        let rem = end % 64;
        if rem > 0 {
            n += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        n
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = BitVec::zeros(130);
        for i in [0, 1, 63, 64, 65, 127, 129] {
            b.set(i, true);
        }
        assert!(b.get(0) && b.get(64) && b.get(129));
        assert!(!b.get(2) && !b.get(128));
        assert_eq!(b.count_ones_below(130), 7);
        assert_eq!(b.count_ones_below(64), 3);
        assert_eq!(b.count_ones_below(65), 4);
        b.set(64, false);
        assert_eq!(b.count_ones_below(130), 6);
    }

}
