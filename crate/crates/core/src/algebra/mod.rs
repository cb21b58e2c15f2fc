//! Boolean method-dependency calculus.
//!
//! An interface with `n` real methods is modelled with `n + 1` slots; slot 0
//! is the dummy method, which is never available. A [`DependencyMatrix`]
//! describes one adapter: row `j` lists the source slots that target method
//! `j` requires. [`DependencyMatrix::apply`] pushes an [`AvailabilityVector`]
//! through an adapter and [`DependencyMatrix::compose`] fuses two adapters
//! into one, so that
//!
//! ```text
//! b.apply(&a.apply(&p)?)? == b.compose(&a)?.apply(&p)?
//! ```

pub(crate) mod bits;
mod matrix;
mod vector;

pub use matrix::{DependencyMatrix, Requirement};
pub use vector::AvailabilityVector;

use thiserror::Error;

/// Largest number of slots (dummy included) a vector or matrix side may have.
pub const MAX_DIM: usize = (1 << 20) + 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension must be at least 1 (the dummy slot)")]
    ZeroDimension,
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the dummy slot of an availability vector must be false")]
    DummyAvailable,
    #[error("row 0 must contain exactly the dummy entry")]
    MalformedDummyRow,
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("row {row} depends on the dummy method together with real methods")]
    MixedRow { row: usize },
    #[error("method index {index} out of range for {len} real methods")]
    IndexOutOfRange { index: usize, len: usize },
}

pub(crate) fn check_dim(dim: usize) -> Result<(), AlgebraError> {
    if dim == 0 {
        Err(AlgebraError::ZeroDimension)
    } else if dim > MAX_DIM {
        Err(AlgebraError::DimensionTooLarge(dim))
    } else {
        Ok(())
    }
}

/// Shorthand for [`DependencyMatrix::identity`].
pub fn identity(n: usize) -> Result<DependencyMatrix, AlgebraError> {
    DependencyMatrix::identity(n)
}

/// Shorthand for [`AvailabilityVector::full`].
pub fn full_availability(n: usize) -> Result<AvailabilityVector, AlgebraError> {
    AvailabilityVector::full(n)
}
