//! The tensor algebra `T(V,1)` on a space concentrated in degree 1 and the
//! free graded Lie algebra `L(V,1)` inside it.
//!
//! A tensor word is a tuple of basis indices of `V`; since every letter has
//! degree 1, the degree of a word is its length and every Koszul sign is a
//! permutation sign. Words of a fixed length are ordered lexicographically,
//! which fixes the row layout of every matrix built from them.

mod bracket;
mod derivation;
mod lie_basis;

pub use bracket::{graded_bracket, nested_bracket, BracketTree};
pub use derivation::{d_tilde, extend_d};
pub use lie_basis::{bracket_image, lie_basis, project_p, LieBasis, WordSpace};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, Scalar, SparseVec};

/// A tensor word: letters are basis indices of `V`.
pub type Word = Vec<usize>;

/// Position of a length-`n` word in the lexicographic enumeration of `V^{⊗n}`.
pub fn word_index(word: &[usize], dim_v: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * dim_v + l)
}

pub fn word_at(mut index: usize, dim_v: usize, degree: usize) -> Word {
    let mut w = vec![0; degree];
    for slot in w.iter_mut().rev() {
        *slot = index % dim_v;
        index /= dim_v;
    }
    w
}

/// All `dim_v^degree` words in lexicographic order.
pub fn all_words(dim_v: usize, degree: usize) -> Vec<Word> {
    let count = dim_v.pow(degree as u32);
    (0..count).map(|i| word_at(i, dim_v, degree)).collect()
}

/// Homogeneous element of `V^{⊗n}`: a finite combination of words of length
/// `degree`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1` of `T(V,1)`, i.e. the empty word.
    pub fn unit() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(word: Word) -> Self {
        Self::term(word, Scalar::from_integer(1.into()))
    }

    pub fn term(word: Word, coeff: Scalar) -> Self {
        let mut t = Self::zero(word.len());
        t.add_term(word, coeff);
        t
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Self> {
        let mut t = Self::zero(degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(Error::DimensionMismatch(format!(
                    "word of length {} in a degree-{degree} tensor",
                    w.len()
                )));
            }
            t.add_term(w, c);
        }
        Ok(t)
    }

    /// `x_1 ⊗ ⋯ ⊗ x_n` for coordinate vectors `x_i` of `V`.
    pub fn from_vectors(vectors: &[&[Scalar]]) -> Self {
        let mut acc = Self::unit();
        for v in vectors {
            let factor = Self::from_terms(
                1,
                v.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (vec![i], c.clone())),
            )
            .expect("letters have degree 1");
            acc = acc.tensor(&factor);
        }
        acc
    }

    /// Coordinates in the lexicographic basis of `V^{⊗n}`.
    pub fn from_dense(degree: usize, dim_v: usize, coords: &[Scalar]) -> Self {
        let mut t = Self::zero(degree);
        for (i, c) in coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            t.add_term(word_at(i, dim_v, degree), c.clone());
        }
        t
    }

    pub fn to_dense(&self, dim_v: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim_v.pow(self.degree as u32)];
        for (w, c) in &self.terms {
            v[word_index(w, dim_v)] = c.clone();
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest letter index plus one; zero for the zero tensor.
    pub fn letter_bound(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|w| w.iter())
            .max()
            .map_or(0, |&m| m + 1)
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        debug_assert_eq!(word.len(), self.degree);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(slot) => {
                *slot += coeff;
                if slot.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Scalar, other: &TensorElement) {
        debug_assert_eq!(self.degree, other.degree);
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), factor * c);
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(factor, self);
        out
    }

    /// Concatenation product in `T(V,1)`.
    pub fn tensor(&self, other: &TensorElement) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    /// Linear extension of a map defined on words.
    pub fn map_words(&self, out_degree: usize, mut f: impl FnMut(&[usize]) -> TensorElement) -> Self {
        let mut out = Self::zero(out_degree);
        for (w, c) in &self.terms {
            out.add_scaled(c, &f(w));
        }
        out
    }

    pub fn to_sparse(&self, index: impl Fn(&[usize]) -> usize) -> SparseVec {
        self.terms.iter().map(|(w, c)| (index(w), c.clone())).collect()
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        self.add_scaled(&Scalar::from_integer(1.into()), rhs);
    }
}

impl SubAssign<&TensorElement> for TensorElement {
    fn sub_assign(&mut self, rhs: &TensorElement) {
        self.add_scaled(&Scalar::from_integer((-1).into()), rhs);
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;

    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;

    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;

    fn neg(self) -> TensorElement {
        self.scaled(&Scalar::from_integer((-1).into()))
    }
}

impl Mul<&Scalar> for &TensorElement {
    type Output = TensorElement;

    fn mul(self, rhs: &Scalar) -> TensorElement {
        self.scaled(rhs)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0[deg {}]", self.degree);
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.iter().map(usize::to_string).collect();
                format!("{}·({})", format_rational(c), letters.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
