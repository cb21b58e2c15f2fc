//! Packed `u64` word helpers shared by vectors and matrix rows.
//!
//! Every packed slice keeps its padding bits (positions at or beyond the
//! declared length) cleared, so whole-word comparisons and hashing are exact.

pub(crate) const WORD_BITS: usize = u64::BITS as usize;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
fn location(bit: usize) -> (usize, u64) {
    (bit / WORD_BITS, 1u64 << (bit % WORD_BITS))
}

#[inline]
pub(crate) fn get(words: &[u64], bit: usize) -> bool {
    let (i, mask) = location(bit);
    words[i] & mask != 0
}

#[inline]
pub(crate) fn set(words: &mut [u64], bit: usize, value: bool) {
    let (i, mask) = location(bit);
    if value {
        words[i] |= mask;
    } else {
        words[i] &= !mask;
    }
}

#[inline]
pub(crate) fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// True iff every bit set in `required` is also set in `available`.
#[inline]
pub(crate) fn is_covered(required: &[u64], available: &[u64]) -> bool {
    required.iter().zip(available).all(|(&r, &a)| r & !a == 0)
}

#[inline]
pub(crate) fn or_assign(dst: &mut [u64], src: &[u64]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

/// Iterator over the indices of set bits, ascending.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + tz);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Growable-free bit set over a fixed domain, used for visited-interface sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct FixedBitSet {
    words: Vec<u64>,
}

impl FixedBitSet {
    pub(crate) fn new(domain: usize) -> Self {
        FixedBitSet {
            words: vec![0; words_for(domain)],
        }
    }

    pub(crate) fn contains(&self, bit: usize) -> bool {
        get(&self.words, bit)
    }

    pub(crate) fn insert(&mut self, bit: usize) {
        set(&mut self.words, bit, true);
    }
}
