//! Leibniz algebras given by structure constants.
//!
//! The bracket satisfies the (right) Leibniz identity
//! `{x,{y,z}} = {{x,y},z} − {{x,z},y}`; Lie algebras are exactly the
//! antisymmetric Leibniz algebras. Algebras are immutable once built.

mod catalog;
pub mod file;
mod free;
mod random;

pub use catalog::{builtin, catalog_names, standard_builtins};
pub use free::{free_leibniz, free_word_weight};
pub use random::random_leibniz;

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{sparse_axpy, Echelon, RationalMatrix, Scalar, SparseVec};
use crate::tensor::TensorElement;

/// Coordinates of an element of an algebra in its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vec![Scalar::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.0[i] = Scalar::from_integer(1.into());
        e
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn to_sparse(&self) -> SparseVec {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    fn from_sparse(dim: usize, v: &SparseVec) -> Self {
        let mut e = Self::zero(dim);
        for (&i, c) in v {
            e.0[i] = c.clone();
        }
        e
    }
}

/// A basis triple on which the Leibniz identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub triple: (usize, usize, usize),
    /// `{x,{y,z}} − {{x,y},z} + {{x,z},y}`
    pub residual: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    name: String,
    basis: Vec<String>,
    /// `table[i * dim + j]` holds `{b_i, b_j}`.
    table: Vec<SparseVec>,
    weights: Option<Vec<u32>>,
}

/// The Liezation `h_Lie = h / span{ {x,y} + {y,x} }` with its quotient map.
#[derive(Clone, Debug)]
pub struct Liezation {
    pub algebra: LeibnizAlgebra,
    pub projection: RationalMatrix,
}

impl LeibnizAlgebra {
    /// Builds an algebra from sparse structure constants `{b_i,b_j}`.
    ///
    /// Checks indices, basis names, duplicate entries and weight
    /// homogeneity; the Leibniz identity itself is checked by [`Self::validate`].
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
        weights: Option<Vec<u32>>,
    ) -> Result<Self> {
        let dim = basis.len();
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.as_str()) {
                return Err(Error::Malformed(format!("duplicate basis name {b:?}")));
            }
        }
        let mut table = vec![SparseVec::new(); dim * dim];
        let mut defined = HashSet::new();
        for ((i, j), value) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::Malformed(format!(
                    "bracket ({i},{j}) outside basis of size {dim}"
                )));
            }
            if !defined.insert((i, j)) {
                return Err(Error::Malformed(format!(
                    "bracket {{{},{}}} given twice",
                    basis[i], basis[j]
                )));
            }
            if let Some(&k) = value.keys().find(|&&k| k >= dim) {
                return Err(Error::Malformed(format!(
                    "bracket {{{},{}}} has component {k} outside basis",
                    basis[i], basis[j]
                )));
            }
            table[i * dim + j] = value.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        if let Some(w) = &weights {
            if w.len() != dim {
                return Err(Error::Malformed(format!(
                    "{} weights for {dim} basis elements",
                    w.len()
                )));
            }
            if w.contains(&0) {
                return Err(Error::Malformed("weights must be positive".into()));
            }
            for i in 0..dim {
                for j in 0..dim {
                    if let Some(&k) = table[i * dim + j].keys().find(|&&k| w[k] != w[i] + w[j]) {
                        return Err(Error::Malformed(format!(
                            "bracket {{{},{}}} has weight-{} component {}, expected weight {}",
                            basis[i],
                            basis[j],
                            w[k],
                            basis[k],
                            w[i] + w[j]
                        )));
                    }
                }
            }
        }
        Ok(LeibnizAlgebra {
            name: name.into(),
            basis,
            table,
            weights,
        })
    }

    /// Builds and then rejects algebras failing the Leibniz identity.
    pub fn new_validated(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
        weights: Option<Vec<u32>>,
    ) -> Result<Self> {
        let a = Self::new(name, basis, brackets, weights)?;
        a.ensure_valid()?;
        Ok(a)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().len() {
            0 => Ok(()),
            n => Err(Error::NotLeibniz(n)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn weights(&self) -> Option<&[u32]> {
        self.weights.as_deref()
    }

    /// `{b_i, b_j}` as a sparse coordinate vector.
    pub fn structure(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dimension() + j]
    }

    /// Nonzero structure constants in `(i, j)` order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &SparseVec)> {
        let dim = self.dimension();
        self.table
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_empty())
            .map(move |(k, v)| ((k / dim, k % dim), v))
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(BTreeMap::is_empty)
    }

    pub(crate) fn bracket_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in u {
            for (&j, b) in v {
                let ab = a * b;
                sparse_axpy(&mut out, &ab, self.structure(i, j));
            }
        }
        out
    }

    fn check_element(&self, e: &Element) -> Result<()> {
        if e.len() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in a {}-dimensional algebra",
                e.len(),
                self.dimension()
            )));
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check_element(u)?;
        self.check_element(v)?;
        Ok(Element::from_sparse(
            self.dimension(),
            &self.bracket_sparse(&u.to_sparse(), &v.to_sparse()),
        ))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let dim = self.dimension();
        (0..dim).all(|i| {
            (i..dim).all(|j| {
                let mut s = self.structure(i, j).clone();
                sparse_axpy(&mut s, &Scalar::from_integer(1.into()), self.structure(j, i));
                s.is_empty()
            })
        })
    }

    /// All basis triples violating the Leibniz identity, in `(i, j, k)` order.
    pub fn validate(&self) -> Vec<Violation> {
        let dim = self.dimension();
        let one = Scalar::from_integer(1.into());
        let mut out = Vec::new();
        for i in 0..dim {
            let xi: SparseVec = [(i, one.clone())].into();
            for j in 0..dim {
                for k in 0..dim {
                    // {x,{y,z}} − {{x,y},z} + {{x,z},y}
                    let mut r = self.bracket_sparse(&xi, self.structure(j, k));
                    let xy_z = self.bracket_sparse(self.structure(i, j), &[(k, one.clone())].into());
                    let xz_y = self.bracket_sparse(self.structure(i, k), &[(j, one.clone())].into());
                    sparse_axpy(&mut r, &-one.clone(), &xy_z);
                    sparse_axpy(&mut r, &one, &xz_y);
                    if !r.is_empty() {
                        out.push(Violation {
                            triple: (i, j, k),
                            residual: Element::from_sparse(dim, &r),
                        });
                    }
                }
            }
        }
        out
    }

    /// Matrix of right multiplication `x ↦ {x, g}`.
    pub fn right_multiplication(&self, g: &Element) -> Result<RationalMatrix> {
        self.check_element(g)?;
        let gs = g.to_sparse();
        let dim = self.dimension();
        let mut m = RationalMatrix::zeros(dim, dim);
        for l in 0..dim {
            let one: SparseVec = [(l, Scalar::from_integer(1.into()))].into();
            for (k, c) in self.bracket_sparse(&one, &gs) {
                m.set(k, l, c);
            }
        }
        Ok(m)
    }

    /// Matrix of left multiplication `y ↦ {x, y}`.
    pub fn left_multiplication(&self, x: &Element) -> Result<RationalMatrix> {
        self.check_element(x)?;
        let xs = x.to_sparse();
        let dim = self.dimension();
        let mut m = RationalMatrix::zeros(dim, dim);
        for l in 0..dim {
            let one: SparseVec = [(l, Scalar::from_integer(1.into()))].into();
            for (k, c) in self.bracket_sparse(&xs, &one) {
                m.set(k, l, c);
            }
        }
        Ok(m)
    }

    /// Diagonal action `{x_1⊗⋯⊗x_n, g} = Σ x_1⊗⋯⊗{x_i,g}⊗⋯⊗x_n` of `g` on
    /// `h^{⊗n}`. It depends on `g` only through its class in `h_Lie`.
    pub fn glie_action(&self, t: &TensorElement, g: &Element) -> Result<TensorElement> {
        let right = self.right_multiplication(g)?;
        crate::tensor::extend_d(&right, t)
    }

    /// The quotient by the span of symmetrized brackets, with a self-check
    /// that the kernel is a two-sided ideal and the quotient is antisymmetric.
    pub fn liezation(&self) -> Result<Liezation> {
        let dim = self.dimension();
        let one = Scalar::from_integer(1.into());
        let mut relations = Echelon::new(dim);
        for i in 0..dim {
            for j in i..dim {
                let mut s = self.structure(i, j).clone();
                sparse_axpy(&mut s, &one, self.structure(j, i));
                relations.insert(&s);
            }
        }
        let pivots: HashSet<usize> = relations.pivots().collect();
        let kept: Vec<usize> = (0..dim).filter(|k| !pivots.contains(k)).collect();
        let position: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(p, &k)| (k, p)).collect();
        let project = |v: &SparseVec| -> SparseVec {
            relations
                .reduce(v)
                .into_iter()
                .map(|(k, c)| (position[&k], c))
                .collect()
        };

        let mut projection = RationalMatrix::zeros(kept.len(), dim);
        for j in 0..dim {
            for (r, c) in project(&[(j, one.clone())].into()) {
                projection.set(r, j, c);
            }
        }

        for rel in relations.basis_rows() {
            for i in 0..dim {
                let e: SparseVec = [(i, one.clone())].into();
                if !project(&self.bracket_sparse(rel, &e)).is_empty()
                    || !project(&self.bracket_sparse(&e, rel)).is_empty()
                {
                    return Err(Error::Internal(format!(
                        "symmetrized brackets of {} do not form an ideal",
                        self.name
                    )));
                }
            }
        }

        let mut brackets = Vec::new();
        for (a, &ka) in kept.iter().enumerate() {
            for (b, &kb) in kept.iter().enumerate() {
                let v = project(self.structure(ka, kb));
                if !v.is_empty() {
                    brackets.push(((a, b), v));
                }
            }
        }
        let weights = self
            .weights
            .as_ref()
            .map(|w| kept.iter().map(|&k| w[k]).collect());
        let algebra = LeibnizAlgebra::new(
            format!("{}_Lie", self.name),
            kept.iter().map(|&k| self.basis[k].clone()).collect(),
            brackets,
            weights,
        )?;
        if !algebra.is_antisymmetric() {
            return Err(Error::Internal(format!(
                "Liezation of {} is not antisymmetric",
                self.name
            )));
        }
        Ok(Liezation {
            algebra,
            projection,
        })
    }

    /// The same algebra in the basis `b'_i = Σ_k P[k][i] b_k`.
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<Self> {
        let dim = self.dimension();
        if p.rows() != dim || p.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "change of basis must be {dim}x{dim}"
            )));
        }
        let inv = p
            .inverse()?
            .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
        let cols: Vec<Element> = (0..dim).map(|i| Element::new(p.column(i))).collect();
        let mut brackets = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let v = self.bracket(&cols[i], &cols[j])?;
                let coords = inv.mul_vec(v.coords())?;
                let sparse = Element::new(coords).to_sparse();
                if !sparse.is_empty() {
                    brackets.push(((i, j), sparse));
                }
            }
        }
        LeibnizAlgebra::new(self.name.clone(), self.basis.clone(), brackets, None)
    }

    /// Direct sum; basis names of `other` are suffixed with `'` on collision.
    pub fn direct_sum(&self, other: &Self, name: impl Into<String>) -> Result<Self> {
        let shift = self.dimension();
        let mut basis = self.basis.clone();
        for b in &other.basis {
            let mut n = b.clone();
            while basis.contains(&n) {
                n.push('\'');
            }
            basis.push(n);
        }
        let brackets = self
            .nonzero_brackets()
            .map(|(ij, v)| (ij, v.clone()))
            .chain(other.nonzero_brackets().map(|((i, j), v)| {
                (
                    (i + shift, j + shift),
                    v.iter().map(|(&k, c)| (k + shift, c.clone())).collect(),
                )
            }))
            .collect::<Vec<_>>();
        LeibnizAlgebra::new(name, basis, brackets, None)
    }
}
