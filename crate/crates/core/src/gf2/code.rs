use std::borrow::Borrow;

use serde::{Deserialize, Serialize};

use super::{BitWord, CodeError};

/// A binary linear code, stored by its reduced row-echelon basis.
///
/// Rows are ordered by ascending pivot (the lowest set coordinate of each
/// row), and every pivot column is zero in all other rows. This basis is
/// unique for a subspace, so two codes are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearCode {
    length: usize,
    basis: Vec<BitWord>,
}

impl LinearCode {
    /// The zero code `{0}` in GF(2)^n.
    pub fn zero(length: usize) -> Self {
        Self {
            length,
            basis: Vec::new(),
        }
    }

    /// The full space GF(2)^n.
    pub fn full(length: usize) -> Self {
        let basis = (0..length)
            .map(|i| {
                let mut w = BitWord::zeros(length);
                w.set(i, true);
                w
            })
            .collect();
        Self { length, basis }
    }

    /// Span of `rows`, by Gaussian elimination. Dependent rows are dropped.
    pub fn from_rows<I>(rows: I) -> Result<Self, CodeError>
    where
        I: IntoIterator,
        I::Item: Borrow<BitWord>,
    {
        let rows: Vec<BitWord> = rows.into_iter().map(|r| r.borrow().clone()).collect();
        let length = rows.first().ok_or(CodeError::EmptyRows)?.len();
        Self::from_rows_with_length(length, rows)
    }

    /// Like [`LinearCode::from_rows`] but with an explicit ambient length, so an
    /// empty row list yields the zero code.
    pub fn from_rows_with_length(length: usize, rows: Vec<BitWord>) -> Result<Self, CodeError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(CodeError::LengthMismatch {
                left: length,
                right: bad.len(),
            });
        }
        Ok(Self {
            length,
            basis: reduced_row_echelon(rows),
        })
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitWord] {
        &self.basis
    }

    /// Pivot column of each basis row, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.leading_one().expect("basis rows are nonzero"))
            .collect()
    }

    /// Reduces `word` against the basis; the remainder is zero iff `word` is a codeword.
    pub fn contains(&self, word: &BitWord) -> Result<bool, CodeError> {
        if word.len() != self.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: word.len(),
            });
        }
        let mut rest = word.clone();
        for row in &self.basis {
            let pivot = row.leading_one().expect("basis rows are nonzero");
            if rest.get(pivot) {
                rest.xor_assign_unchecked(row);
            }
        }
        Ok(rest.is_zero())
    }

    /// The dual code `C⊥ = {v : <v, c> = 0 for all c in C}`.
    ///
    /// Built directly from the echelon form: each non-pivot column `f`
    /// contributes the vector with a 1 at `f` and, at each pivot `p_i`, the
    /// entry of row `i` in column `f`.
    pub fn dual(&self) -> LinearCode {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.length];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.length)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitWord::zeros(self.length);
                v.set(f, true);
                for (row, &p) in self.basis.iter().zip(&pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        LinearCode::from_rows_with_length(self.length, rows).expect("rows have the ambient length")
    }

    /// True iff `C ⊆ C⊥`, i.e. every pair of basis rows (a row with itself
    /// included) meets in an even number of coordinates.
    pub fn is_self_orthogonal(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, a)| {
            self.basis[i..]
                .iter()
                .all(|b| a.intersection_weight(b).expect("same length") % 2 == 0)
        })
    }

    /// Projection of the code onto the support of the codeword `w`.
    ///
    /// Each codeword `v` maps to `v ∩ w` read off on the coordinates of
    /// `support(w)`. The image is a code of length `|w|`.
    pub fn project_onto_support(&self, w: &BitWord) -> Result<Projection, CodeError> {
        if !self.contains(w)? {
            return Err(CodeError::NotACodeword);
        }
        let support = w.support();
        let rows = self.basis.iter().map(|b| b.restrict(&support)).collect();
        let image = LinearCode::from_rows_with_length(support.len(), rows)?;
        let kernel_dimension = self.dimension() - image.dimension();
        Ok(Projection {
            support,
            image,
            kernel_dimension,
        })
    }
}

/// Result of [`LinearCode::project_onto_support`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Projection {
    /// Coordinates of the ambient code that the image coordinates come from.
    pub support: Vec<usize>,
    pub image: LinearCode,
    pub kernel_dimension: usize,
}

fn reduced_row_echelon(mut rows: Vec<BitWord>) -> Vec<BitWord> {
    let Some(length) = rows.first().map(BitWord::len) else {
        return rows;
    };
    let mut rank = 0;
    for col in 0..length {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign_unchecked(&pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}
