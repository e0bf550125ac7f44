use num_traits::Zero;

use super::{sparse_axpy, Echelon, RationalMatrix, Scalar, SparseVec};
use crate::error::{Error, Result};

/// Column-sparse matrix. Boundary maps between large tensor powers are
/// stored this way and only densified on request.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        if let Some(r) = columns.iter().flat_map(|c| c.keys()).find(|&&r| r >= rows) {
            return Err(Error::DimensionMismatch(format!(
                "entry in row {r} of a matrix with {rows} rows"
            )));
        }
        Ok(SparseMatrix { rows, columns })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![SparseVec::new(); cols],
        }
    }

    pub fn from_dense(m: &RationalMatrix) -> Self {
        let columns = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            columns,
        }
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, v) in col {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::len).sum()
    }

    /// Rank via incremental echelon insertion of the columns.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for c in &self.columns {
            e.insert(c);
        }
        e.rank()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&c, x) in v {
            sparse_axpy(&mut out, x, &self.columns[c]);
        }
        out
    }

    /// `self · other`.
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if other.rows != self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn scaled(&self, factor: &Scalar) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols());
        for (dst, src) in out.columns.iter_mut().zip(&self.columns) {
            sparse_axpy(dst, factor, src);
        }
        out
    }
}
