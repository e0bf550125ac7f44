use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::{format_rational, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals. Zero rows or columns are legal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(bad) = columns.iter().position(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch(format!(
                "column {bad} has {} entries, expected {rows}",
                columns[bad].len()
            )));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| super::int(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: &Scalar) {
        let slot = &mut self.data[r * self.cols + c];
        *slot += value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let reduced = rref(&self.hstack(&Self::identity(n))?);
        if reduced.pivot_cols.iter().take_while(|&&p| p < n).count() < n {
            return Ok(None);
        }
        Ok(Some(Self::from_fn(n, n, |r, c| {
            reduced.matrix.get(r, n + c).clone()
        })))
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form by Gauss-Jordan elimination.
///
/// Pivots are chosen in the leftmost column that still has a nonzero entry,
/// taking the first such row. Zero entries are skipped during elimination,
/// which keeps boundary matrices (mostly zeros) cheap.
pub fn rref(m: &RationalMatrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..cols {
                a.data.swap(found * cols + c, pivot_row * cols + c);
            }
        }
        let inv = a.get(pivot_row, col).recip();
        let mut support = Vec::new();
        for c in col..cols {
            let idx = pivot_row * cols + c;
            if !a.data[idx].is_zero() {
                a.data[idx] = &a.data[idx] * &inv;
                support.push(c);
            }
        }
        let pivot: Vec<(usize, Scalar)> = support
            .iter()
            .map(|&c| (c, a.get(pivot_row, c).clone()))
            .collect();
        for r in 0..rows {
            if r == pivot_row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for (c, value) in &pivot {
                let idx = r * cols + c;
                a.data[idx] = &a.data[idx] - &factor * value;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    let rank = pivot_cols.len();
    Rref {
        matrix: a,
        pivot_cols,
        rank,
    }
}

/// Basis of the null space, one column per free variable in increasing
/// order. Each column is scaled so that its first nonzero entry is 1.
pub fn kernel_basis(m: &RationalMatrix) -> RationalMatrix {
    let reduced = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &reduced.pivot_cols {
        is_pivot[p] = true;
    }
    let columns: Vec<Vec<Scalar>> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in reduced.pivot_cols.iter().enumerate() {
                v[p] = -reduced.matrix.get(row, free).clone();
            }
            let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("unit entry");
            if !lead.is_one() {
                let inv = lead.recip();
                v.iter_mut().for_each(|x| *x = &*x * &inv);
            }
            v
        })
        .collect();
    RationalMatrix::from_columns(n, &columns).expect("kernel columns have length cols(M)")
}

/// Canonical basis of the column span: the nonzero rows of
/// `rref(transpose(m))`, transposed back into columns.
pub fn column_space(m: &RationalMatrix) -> RationalMatrix {
    let reduced = rref(&m.transpose());
    RationalMatrix::from_fn(m.rows(), reduced.rank, |r, c| reduced.matrix.get(c, r).clone())
}

/// Whether the column span of `a` lies inside the column span of `b`.
pub fn subspace_contained(a: &RationalMatrix, b: &RationalMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of ambient dimension {} and {}",
            a.rows(),
            b.rows()
        )));
    }
    if a.cols() == 0 {
        return Ok(true);
    }
    Ok(b.rank() == b.hstack(a)?.rank())
}

/// Canonical column basis of the sum of the column spans of `parts`.
pub fn subspace_sum(ambient: usize, parts: &[RationalMatrix]) -> Result<RationalMatrix> {
    let mut stacked = RationalMatrix::zeros(ambient, 0);
    for (i, part) in parts.iter().enumerate() {
        if part.rows() != ambient {
            return Err(Error::DimensionMismatch(format!(
                "part {i} lives in dimension {}, expected {ambient}",
                part.rows()
            )));
        }
        stacked = stacked.hstack(part)?;
    }
    Ok(column_space(&stacked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn rref_examples() {
        let id = RationalMatrix::identity(2);
        let r = rref(&id);
        assert_eq!((r.matrix, r.pivot_cols, r.rank), (id, vec![0, 1], 2));

        let r = rref(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.matrix, RationalMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!((r.pivot_cols, r.rank), (vec![0], 1));

        let z = RationalMatrix::zeros(3, 3);
        let r = rref(&z);
        assert_eq!((r.matrix, r.pivot_cols, r.rank), (z, vec![], 0));
    }

    #[test]
    fn rref_of_empty_matrices() {
        assert_eq!(rref(&RationalMatrix::zeros(0, 4)).rank, 0);
        assert_eq!(rref(&RationalMatrix::zeros(3, 0)).rank, 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&RationalMatrix::identity(3)).cols(), 0);
        assert_eq!(
            kernel_basis(&RationalMatrix::zeros(3, 3)),
            RationalMatrix::identity(3)
        );
        let k = kernel_basis(&RationalMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k, RationalMatrix::from_i64(&[&[1], &[-1]]));
    }

    #[test]
    fn containment_examples() {
        let id = RationalMatrix::identity(2);
        let e1 = RationalMatrix::from_i64(&[&[1], &[0]]);
        assert!(subspace_contained(&e1, &id).unwrap());
        assert!(!subspace_contained(&id, &e1).unwrap());
        assert!(subspace_contained(&RationalMatrix::zeros(2, 0), &e1).unwrap());
        assert!(subspace_contained(&id, &RationalMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn sum_examples() {
        let e1 = RationalMatrix::from_i64(&[&[1], &[0]]);
        let e2 = RationalMatrix::from_i64(&[&[0], &[3]]);
        assert_eq!(subspace_sum(2, &[e1, e2]).unwrap(), RationalMatrix::identity(2));
        let v = RationalMatrix::from_i64(&[&[2], &[4], &[0]]);
        let s = subspace_sum(3, &[v.clone(), v]).unwrap();
        assert_eq!(s, RationalMatrix::from_i64(&[&[1], &[2], &[0]]));
        assert_eq!(subspace_sum(4, &[]).unwrap(), RationalMatrix::zeros(4, 0));
        assert!(subspace_sum(2, &[RationalMatrix::zeros(3, 1)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(2));
        assert!(RationalMatrix::from_i64(&[&[1, 2], &[2, 4]])
            .inverse()
            .unwrap()
            .is_none());
        assert_eq!(inv.get(0, 1), &int(-1));
    }
}
