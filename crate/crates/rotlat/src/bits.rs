//! Row-major bit matrix for order relations on up to a few thousand elements.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> BitMatrix {
        let words = n.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; n * words],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// OR the given words into row `dst`.
    pub fn or_into_row(&mut self, dst: usize, words: &[u64]) {
        let base = dst * self.words;
        for (w, &word) in words.iter().enumerate() {
            self.bits[base + w] |= word;
        }
    }
}

/// Iterate the set bit positions of a u64 mask, ascending.
pub(crate) fn mask_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let bit = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(bit)
        }
    })
}
