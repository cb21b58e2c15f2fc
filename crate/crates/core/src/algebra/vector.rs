use std::fmt;

use super::bits::{self, Ones};
use super::{check_dim, AlgebraError};

/// Which methods of an interface are usable. Slot 0 is the dummy method and
/// is always false.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AvailabilityVector {
    dim: usize,
    words: Vec<u64>,
}

impl AvailabilityVector {
    /// All slots false.
    pub fn none(dim: usize) -> Result<Self, AlgebraError> {
        check_dim(dim)?;
        Ok(AvailabilityVector {
            dim,
            words: vec![0; bits::words_for(dim)],
        })
    }

    /// Every real method available, dummy unavailable.
    pub fn full(dim: usize) -> Result<Self, AlgebraError> {
        let mut v = Self::none(dim)?;
        for slot in 1..dim {
            bits::set(&mut v.words, slot, true);
        }
        Ok(v)
    }

    /// Builds a vector from all slots, dummy included.
    pub fn from_bools(slots: &[bool]) -> Result<Self, AlgebraError> {
        let mut v = Self::none(slots.len())?;
        if slots[0] {
            return Err(AlgebraError::DummyAvailable);
        }
        for (slot, &on) in slots.iter().enumerate() {
            if on {
                bits::set(&mut v.words, slot, true);
            }
        }
        Ok(v)
    }

    /// Builds a vector of `dim` slots with the given slots set.
    pub fn from_available(
        dim: usize,
        available: impl IntoIterator<Item = usize>,
    ) -> Result<Self, AlgebraError> {
        let mut v = Self::none(dim)?;
        for slot in available {
            if slot == 0 {
                return Err(AlgebraError::DummyAvailable);
            }
            if slot >= dim {
                return Err(AlgebraError::IndexOutOfRange {
                    index: slot,
                    len: dim,
                });
            }
            bits::set(&mut v.words, slot, true);
        }
        Ok(v)
    }

    pub(crate) fn from_words(dim: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), bits::words_for(dim));
        debug_assert!(!bits::get(&words, 0));
        AvailabilityVector { dim, words }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Number of slots, dummy included.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, slot: usize) -> bool {
        assert!(slot < self.dim, "slot {slot} out of range {}", self.dim);
        bits::get(&self.words, slot)
    }

    /// Number of available methods.
    pub fn norm(&self) -> usize {
        bits::count_ones(&self.words)
    }

    /// Available slots in ascending order.
    pub fn available(&self) -> impl Iterator<Item = usize> + '_ {
        Ones::new(&self.words)
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.dim).map(|slot| self.get(slot)).collect()
    }

    /// Componentwise `self <= other`.
    pub fn is_subset_of(&self, other: &AvailabilityVector) -> bool {
        self.dim == other.dim && bits::is_covered(&self.words, &other.words)
    }
}

impl fmt::Debug for AvailabilityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[f, t, f]` notation.
impl fmt::Display for AvailabilityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for slot in 0..self.dim {
            if slot > 0 {
                f.write_str(", ")?;
            }
            f.write_str(if self.get(slot) { "t" } else { "f" })?;
        }
        f.write_str("]")
    }
}
