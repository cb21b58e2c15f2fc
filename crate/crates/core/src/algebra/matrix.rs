use std::fmt;

use super::bits::{self, Ones};
use super::{check_dim, AlgebraError, AvailabilityVector};

/// What one target method needs from the source interface.
///
/// Slots are matrix column indices: 0 is the dummy method and real source
/// methods start at 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Requirement {
    /// Implementable with no source methods at all.
    Always,
    /// Not implementable from this source (depends on the dummy).
    Never,
    /// Implementable iff every listed real source slot is available.
    Requires(Vec<usize>),
}

/// Boolean `rows x cols` matrix; entry `(j, i)` is true iff target method `j`
/// can only be implemented when source method `i` is available.
///
/// Rows are stored as packed `u64` words. Row 0 is always exactly the dummy
/// entry `(0, 0)`. Matrices built from [`Requirement`]s or explicit rows also
/// have every other row in one of the three canonical forms; the product
/// returned by [`compose`](Self::compose) may contain rows that name the
/// dummy together with real methods, which evaluate exactly like
/// [`Requirement::Never`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DependencyMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl DependencyMatrix {
    fn zeroed(rows: usize, cols: usize) -> Result<Self, AlgebraError> {
        check_dim(rows)?;
        check_dim(cols)?;
        let stride = bits::words_for(cols);
        Ok(DependencyMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        })
    }

    /// `n x n` identity: the adapter that changes nothing.
    pub fn identity(n: usize) -> Result<Self, AlgebraError> {
        let mut m = Self::zeroed(n, n)?;
        for j in 0..n {
            m.set(j, j);
        }
        Ok(m)
    }

    /// Builds a matrix from one [`Requirement`] per real target method. The
    /// result has `requirements.len() + 1` rows and `source_dim` columns.
    pub fn from_requirements(
        source_dim: usize,
        requirements: &[Requirement],
    ) -> Result<Self, AlgebraError> {
        let mut m = Self::zeroed(requirements.len() + 1, source_dim)?;
        m.set(0, 0);
        for (offset, req) in requirements.iter().enumerate() {
            let row = offset + 1;
            match req {
                Requirement::Always => {}
                Requirement::Never => m.set(row, 0),
                Requirement::Requires(slots) => {
                    for &slot in slots {
                        if slot == 0 {
                            return Err(AlgebraError::MixedRow { row });
                        }
                        if slot >= source_dim {
                            return Err(AlgebraError::IndexOutOfRange {
                                index: slot,
                                len: source_dim - 1,
                            });
                        }
                        m.set(row, slot);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from explicit rows, dummy row included, rejecting any
    /// row outside the canonical forms.
    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeroed(rows.len(), cols)?;
        for (j, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(AlgebraError::RaggedRow {
                    row: j,
                    expected: cols,
                    found: row.len(),
                });
            }
            for (i, &on) in row.iter().enumerate() {
                if on {
                    m.set(j, i);
                }
            }
        }
        m.check_canonical()?;
        Ok(m)
    }

    fn check_canonical(&self) -> Result<(), AlgebraError> {
        if !self.get(0, 0) || self.row_ones(0).count() != 1 {
            return Err(AlgebraError::MalformedDummyRow);
        }
        for j in 1..self.rows {
            if self.get(j, 0) && self.row_ones(j).count() > 1 {
                return Err(AlgebraError::MixedRow { row: j });
            }
        }
        Ok(())
    }

    #[inline]
    fn set(&mut self, j: usize, i: usize) {
        let start = j * self.stride;
        bits::set(&mut self.words[start..start + self.stride], i, true);
    }

    #[inline]
    fn row_words(&self, j: usize) -> &[u64] {
        &self.words[j * self.stride..(j + 1) * self.stride]
    }

    fn row_ones(&self, j: usize) -> Ones<'_> {
        Ones::new(self.row_words(j))
    }

    /// Target slots, dummy included.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Source slots, dummy included.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, j: usize, i: usize) -> bool {
        assert!(
            j < self.rows && i < self.cols,
            "entry ({j}, {i}) out of range"
        );
        bits::get(self.row_words(j), i)
    }

    /// The requirement row `j` expresses. Rows naming the dummy are reported
    /// as [`Requirement::Never`].
    pub fn requirement(&self, j: usize) -> Requirement {
        assert!(j < self.rows, "row {j} out of range");
        if self.get(j, 0) {
            return Requirement::Never;
        }
        let slots: Vec<usize> = self.row_ones(j).collect();
        if slots.is_empty() {
            Requirement::Always
        } else {
            Requirement::Requires(slots)
        }
    }

    pub fn to_bools(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|j| (0..self.cols).map(|i| self.get(j, i)).collect())
            .collect()
    }

    /// Target availability given source availability `p`:
    /// `q[j] = AND_i (!m[j][i] || p[i])`.
    pub fn apply(&self, p: &AvailabilityVector) -> Result<AvailabilityVector, AlgebraError> {
        if p.dim() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: p.dim(),
            });
        }
        let mut out = vec![0u64; bits::words_for(self.rows)];
        for j in 0..self.rows {
            if bits::is_covered(self.row_words(j), p.words()) {
                bits::set(&mut out, j, true);
            }
        }
        Ok(AvailabilityVector::from_words(self.rows, out))
    }

    /// Boolean product `self . inner`: the single adapter equivalent to
    /// running `inner` first and then `self`. Entry `(k, i)` is
    /// `OR_j (self[k][j] && inner[j][i])`.
    pub fn compose(&self, inner: &DependencyMatrix) -> Result<DependencyMatrix, AlgebraError> {
        if self.cols != inner.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.cols,
                found: inner.rows,
            });
        }
        let stride = inner.stride;
        let mut words = vec![0u64; self.rows * stride];
        for k in 0..self.rows {
            let out = &mut words[k * stride..(k + 1) * stride];
            for j in self.row_ones(k) {
                bits::or_assign(out, inner.row_words(j));
            }
        }
        Ok(DependencyMatrix {
            rows: self.rows,
            cols: inner.cols,
            stride,
            words,
        })
    }
}

impl fmt::Debug for DependencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DependencyMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// One line per row, entries written as `t`/`f`.
impl fmt::Display for DependencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.rows {
            for i in 0..self.cols {
                if i > 0 {
                    f.write_str(" ")?;
                }
                f.write_str(if self.get(j, i) { "t" } else { "f" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
