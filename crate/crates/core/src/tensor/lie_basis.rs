use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::{all_words, nested_bracket, TensorElement, Word};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, RationalMatrix, Scalar, SparseVec};

/// An ordered set of words of one length, used as coordinates.
///
/// The full space is every word over `dim_v` letters; weight-graded
/// computations use the subset of words of a given total weight.
#[derive(Clone, Debug)]
pub struct WordSpace {
    dim_v: usize,
    degree: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl WordSpace {
    pub fn full(dim_v: usize, degree: usize) -> Self {
        Self::build(dim_v, degree, all_words(dim_v, degree))
    }

    /// Coordinates on the given words, sorted lexicographically.
    pub fn from_words(dim_v: usize, degree: usize, mut words: Vec<Word>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != degree || w.iter().any(|&l| l >= dim_v)) {
            return Err(Error::InvalidArgument(format!(
                "word {w:?} is not a degree-{degree} word over {dim_v} letters"
            )));
        }
        words.sort();
        words.dedup();
        Ok(Self::build(dim_v, degree, words))
    }

    fn build(dim_v: usize, degree: usize, words: Vec<Word>) -> Self {
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        WordSpace {
            dim_v,
            degree,
            words,
            index,
        }
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn index_of(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn to_sparse(&self, t: &TensorElement) -> Result<SparseVec> {
        t.terms()
            .map(|(w, c)| {
                self.index_of(w).map(|i| (i, c.clone())).ok_or_else(|| {
                    Error::InvalidArgument(format!("word {w:?} outside the coordinate space"))
                })
            })
            .collect()
    }

    pub fn from_sparse(&self, v: &SparseVec) -> TensorElement {
        TensorElement::from_terms(self.degree, v.iter().map(|(&i, c)| (self.words[i].clone(), c.clone())))
            .expect("space words have the space degree")
    }
}

/// `Σ coeff(w)·[[w]]`, the image of `i_n ∘ p_n` on a tensor.
pub fn bracket_image(t: &TensorElement) -> TensorElement {
    t.map_words(t.degree(), nested_bracket)
}

/// A basis of `L(V,1)_n` (or of its part inside a [`WordSpace`]).
///
/// The basis is the canonical reduced echelon basis of the span of all nested
/// brackets `[[w]]`: each basis vector has coefficient 1 at its pivot word and
/// 0 at every other pivot word, so Lie coordinates of a vector in the span are
/// its coefficients at the pivot words.
#[derive(Clone, Debug)]
pub struct LieBasis {
    space: WordSpace,
    echelon: Echelon,
    columns: Vec<TensorElement>,
}

impl LieBasis {
    /// The span of `[[w]]` over all words `w` of `space`. Nested brackets
    /// only permute letters, so the span stays inside any space closed under
    /// permutation of letters.
    pub fn spanning(space: WordSpace) -> Result<Self> {
        let mut echelon = Echelon::new(space.len());
        for w in space.words() {
            echelon.insert(&space.to_sparse(&nested_bracket(w))?);
        }
        let columns = echelon.basis_rows().map(|r| space.from_sparse(r)).collect();
        Ok(LieBasis {
            space,
            echelon,
            columns,
        })
    }

    pub fn dim_v(&self) -> usize {
        self.space.dim_v()
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    /// `dim L(V,1)_n`.
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn space(&self) -> &WordSpace {
        &self.space
    }

    pub fn columns(&self) -> &[TensorElement] {
        &self.columns
    }

    /// The matrix of `i_n`: columns are basis elements in word coordinates.
    pub fn inclusion(&self) -> RationalMatrix {
        self.echelon.to_column_matrix()
    }

    /// `i_n` applied to Lie coordinates.
    pub fn include(&self, coords: &[Scalar]) -> Result<TensorElement> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} Lie coordinates for a {}-dimensional L(V,1)_{}",
                coords.len(),
                self.dim(),
                self.degree()
            )));
        }
        let mut out = TensorElement::zero(self.degree());
        for (c, col) in coords.iter().zip(&self.columns) {
            out.add_scaled(c, col);
        }
        Ok(out)
    }

    /// Lie coordinates of `t`, or `None` when `t` is not in `L(V,1)_n`.
    pub fn coordinates(&self, t: &TensorElement) -> Option<Vec<Scalar>> {
        if t.degree() != self.degree() {
            return None;
        }
        self.echelon.coordinates(&self.space.to_sparse(t).ok()?)
    }

    pub fn contains(&self, t: &TensorElement) -> bool {
        self.coordinates(t).is_some()
    }

    /// `p_n(t)` in Lie coordinates.
    pub fn project_p(&self, t: &TensorElement) -> Result<Vec<Scalar>> {
        if t.degree() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "p_{} applied to a degree-{} tensor",
                self.degree(),
                t.degree()
            )));
        }
        let image = bracket_image(t);
        self.coordinates(&image).ok_or_else(|| {
            Error::Internal(format!(
                "nested bracket image left L(V,1)_{} (tensor outside the coordinate space?)",
                self.degree()
            ))
        })
    }

    /// Matrix of `p_n` against the word coordinates of the space.
    pub fn projection(&self) -> Result<RationalMatrix> {
        let mut m = RationalMatrix::zeros(self.dim(), self.space.len());
        for (c, w) in self.space.words().iter().enumerate() {
            let v = self.project_p(&TensorElement::word(w.clone()))?;
            for (r, x) in v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                m.set(r, c, x);
            }
        }
        Ok(m)
    }
}

type LieCache = Mutex<HashMap<(usize, usize), Arc<LieBasis>>>;

fn cache() -> &'static LieCache {
    static CACHE: OnceLock<LieCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Basis of `L(V,1)_n` for `dim V = dim_v`, memoized process-wide.
pub fn lie_basis(dim_v: usize, n: usize, caps: &Caps) -> Result<Arc<LieBasis>> {
    if n == 0 || dim_v == 0 {
        return Err(Error::InvalidArgument(format!(
            "lie_basis needs n >= 1 and dim V >= 1, got n = {n}, dim V = {dim_v}"
        )));
    }
    caps.check_power(&format!("V^(⊗{n}) with dim V = {dim_v}"), dim_v, n)?;
    if let Some(hit) = cache().lock().expect("lie cache poisoned").get(&(dim_v, n)) {
        return Ok(hit.clone());
    }
    let basis = Arc::new(LieBasis::spanning(WordSpace::full(dim_v, n))?);
    // Concurrent builders produce the same canonical basis; first insert wins.
    let mut guard = cache().lock().expect("lie cache poisoned");
    Ok(guard.entry((dim_v, n)).or_insert(basis).clone())
}

/// `p_n(t)` in the coordinates of [`lie_basis`]`(dim_v, deg t)`.
pub fn project_p(dim_v: usize, t: &TensorElement, caps: &Caps) -> Result<Vec<Scalar>> {
    lie_basis(dim_v, t.degree(), caps)?.project_p(t)
}
