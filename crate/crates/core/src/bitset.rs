//! Minimal dense bit structures for membership tables and adjacency rows.

/// Flat bit vector.
#[derive(Debug, Clone)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn new(len: usize) -> Self {
        BitVec {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    #[inline(always)]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline(always)]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline(always)]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline(always)]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 != 0
    }

    /// Sets bit `i`, returning whether it was already set.
    #[inline(always)]
    pub fn test_and_set(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i >> 6];
        let mask = 1u64 << (i & 63);
        let was = *w & mask != 0;
        *w |= mask;
        was
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of zero bits, ascending.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| !self.get(i))
    }
}

/// Square symmetric bit matrix with row-major u64 words; one row per vertex.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    words: Vec<u64>,
    stride: usize,
    n: usize,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitMatrix {
            words: vec![0u64; stride.checked_mul(n).expect("bit matrix too large")],
            stride,
            n,
        }
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn set(&mut self, r: usize, c: usize) {
        debug_assert!(r < self.n && c < self.n);
        self.words[r * self.stride + (c >> 6)] |= 1u64 << (c & 63);
    }

    #[inline(always)]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.n && c < self.n);
        (self.words[r * self.stride + (c >> 6)] >> (c & 63)) & 1 != 0
    }

    #[inline(always)]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    /// Popcount of the AND of two rows.
    #[inline]
    pub fn intersection_size(&self, a: usize, b: usize) -> u64 {
        let ra = self.row(a);
        let rb = self.row(b);
        ra.iter()
            .zip(rb)
            .map(|(x, y)| (x & y).count_ones() as u64)
            .sum()
    }

    pub fn row_ones(&self, r: usize) -> u64 {
        self.row(r).iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Set bits of a row, ascending.
    pub fn iter_row(&self, r: usize) -> RowIter<'_> {
        RowIter {
            row: self.row(r),
            word_idx: 0,
            current: self.row(r).first().copied().unwrap_or(0),
        }
    }
}

pub struct RowIter<'a> {
    row: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for RowIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.row.len() {
                return None;
            }
            self.current = self.row[self.word_idx];
        }
        let tz = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_roundtrip() {
        let mut bv = BitVec::new(130);
        bv.set(0);
        bv.set(64);
        bv.set(129);
        assert!(bv.get(0) && bv.get(64) && bv.get(129));
        assert!(!bv.get(1) && !bv.get(128));
        assert_eq!(bv.count_ones(), 3);
        assert!(bv.test_and_set(64));
        assert!(!bv.test_and_set(65));
    }

    #[test]
    fn bitmatrix_rows() {
        let mut m = BitMatrix::new(70);
        m.set(3, 69);
        m.set(3, 0);
        m.set(69, 3);
        assert!(m.get(3, 69));
        assert_eq!(m.iter_row(3).collect::<Vec<_>>(), vec![0, 69]);
        assert_eq!(m.intersection_size(3, 69), 0);
        m.set(69, 0);
        assert_eq!(m.intersection_size(3, 69), 1);
    }
}
