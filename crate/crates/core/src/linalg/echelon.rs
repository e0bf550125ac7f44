use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{RationalMatrix, Scalar};

/// Sparse vector: coordinate index to nonzero value.
pub type SparseVec = BTreeMap<usize, Scalar>;

/// `target += factor * source`, dropping entries that cancel.
pub fn sparse_axpy(target: &mut SparseVec, factor: &Scalar, source: &SparseVec) {
    for (&i, v) in source {
        let delta = factor * v;
        match target.get_mut(&i) {
            Some(slot) => {
                *slot += delta;
                if slot.is_zero() {
                    target.remove(&i);
                }
            }
            None => {
                target.insert(i, delta);
            }
        }
    }
}

/// A subspace of `Q^ambient` kept as a fully reduced row echelon basis.
///
/// Every stored row has leading coefficient 1 at its pivot and zeros at all
/// other pivots, so the basis is canonical: two `Echelon`s span the same
/// subspace iff their [`Echelon::basis_rows`] agree.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ambient: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residual of `v` after subtracting its components along the basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (p, coeff) in v.iter().filter(|(p, _)| self.rows.contains_key(p)) {
            sparse_axpy(&mut out, &-coeff.clone(), &self.rows[p]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            r.values_mut().for_each(|x| *x = &*x * &inv);
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                sparse_axpy(row, &-c, &r);
            }
        }
        self.rows.insert(pivot, r);
        true
    }

    /// Coordinates of `v` in the basis ordered by pivot, or `None` when `v`
    /// is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(
            self.rows
                .keys()
                .map(|p| v.get(p).cloned().unwrap_or_else(Scalar::zero))
                .collect(),
        )
    }

    /// Basis rows in increasing pivot order.
    pub fn basis_rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// The basis as columns of an `ambient x rank` matrix.
    pub fn to_column_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.ambient, self.rank());
        for (c, row) in self.rows.values().enumerate() {
            for (&r, v) in row {
                m.set(r, c, v.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{column_space, int};

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, v)| (i, int(v))).collect()
    }

    #[test]
    fn insert_and_coordinates() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&sv(&[(0, 2), (1, 2)])));
        assert!(!e.insert(&sv(&[(0, -1), (1, -1)])));
        assert!(e.insert(&sv(&[(1, 1), (2, 1)])));
        assert_eq!(e.rank(), 2);
        let v = sv(&[(0, 1), (1, 3), (2, 2)]);
        assert_eq!(e.coordinates(&v), Some(vec![int(1), int(3)]));
        assert_eq!(e.coordinates(&sv(&[(2, 1)])), None);
    }

    #[test]
    fn matches_dense_column_space() {
        let cols = [
            sv(&[(0, 1), (2, -1)]),
            sv(&[(1, 2), (3, 4)]),
            sv(&[(0, 2), (1, 2), (2, -2), (3, 4)]),
        ];
        let mut e = Echelon::new(4);
        for c in &cols {
            e.insert(c);
        }
        let dense = RationalMatrix::from_fn(4, 3, |r, c| {
            cols[c].get(&r).cloned().unwrap_or_else(Scalar::zero)
        });
        assert_eq!(e.to_column_matrix(), column_space(&dense));
    }
}
