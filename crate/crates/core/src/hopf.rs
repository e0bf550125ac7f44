//! The Hopf structure of `T(V,1)`: the unshuffle coproduct with Koszul
//! signs, concatenation, and the maps `p_D` entering the Wigner identity
//! `μ∘(p_D⊗Id)∘Δ(ω) = D_n(ω)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{sign, RationalMatrix, Scalar};
use crate::tensor::{extend_d, nested_bracket, LieBasis, TensorElement, Word};

/// An element of `T(V)⊗T(V)`; terms may have mixed bidegrees.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TwoSidedTensor {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TwoSidedTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(left: Word, right: Word, coeff: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, coeff);
        t
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += coeff;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Scalar)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coefficient(&self, left: &[usize], right: &[usize]) -> Scalar {
        self.terms
            .get(&(left.to_vec(), right.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
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

    /// `a ⊗ b` for homogeneous tensors.
    pub fn from_pair(a: &TensorElement, b: &TensorElement) -> Self {
        let mut out = Self::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                out.add_term(u.clone(), v.clone(), x * y);
            }
        }
        out
    }

    /// Product in the graded tensor product algebra:
    /// `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let s = sign(b.len() * c.len());
                let mut ac = a.clone();
                ac.extend_from_slice(c);
                let mut bd = b.clone();
                bd.extend_from_slice(d);
                out.add_term(ac, bd, s * x * y);
            }
        }
        out
    }
}

impl std::fmt::Debug for TwoSidedTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|((a, b), c)| (format!("{a:?}⊗{b:?}"), c.to_string())))
            .finish()
    }
}

/// `Δ(w)` for a single word: Σ over subsets `S` of positions of
/// `sign(S)·w_S ⊗ w_{S^c}`, the sign counting pairs `c < s` with `s ∈ S`,
/// `c ∉ S`.
pub fn coproduct_word(w: &[usize]) -> TwoSidedTensor {
    let n = w.len();
    assert!(n < usize::BITS as usize, "word too long for subset enumeration");
    let mut out = TwoSidedTensor::zero();
    for mask in 0usize..(1 << n) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut inversions = 0;
        for (k, &l) in w.iter().enumerate() {
            if mask >> k & 1 == 1 {
                left.push(l);
                inversions += right.len();
            } else {
                right.push(l);
            }
        }
        out.add_term(left, right, sign(inversions));
    }
    out
}

/// The coproduct, multiplicative with `Δ(v) = v⊗1 + 1⊗v` on `V`.
pub fn coproduct(t: &TensorElement) -> TwoSidedTensor {
    let mut out = TwoSidedTensor::zero();
    for (w, c) in t.terms() {
        for (a, b, x) in coproduct_word(w).terms() {
            out.add_term(a.clone(), b.clone(), c * x);
        }
    }
    out
}

/// Concatenation `T(V)⊗T(V) → T(V)`; every term must have the same total degree.
pub fn mu(t: &TwoSidedTensor) -> Result<TensorElement> {
    let mut degree = None;
    let mut out = BTreeMap::new();
    for (a, b, c) in t.terms() {
        let total = a.len() + b.len();
        if *degree.get_or_insert(total) != total {
            return Err(Error::InvalidArgument(
                "μ of a tensor with mixed total degrees".into(),
            ));
        }
        let mut w = a.clone();
        w.extend_from_slice(b);
        *out.entry(w).or_insert_with(Scalar::zero) += c;
    }
    TensorElement::from_terms(degree.unwrap_or(0), out)
}

fn check_operator(d: &RationalMatrix, t: &TensorElement) -> Result<()> {
    if d.rows() != d.cols() || t.letter_bound() > d.cols() {
        return Err(Error::DimensionMismatch(format!(
            "operator of shape {}x{} on a tensor with letters up to {}",
            d.rows(),
            d.cols(),
            t.letter_bound()
        )));
    }
    Ok(())
}

fn p_d_word(d: &RationalMatrix, w: &[usize]) -> TensorElement {
    let n = w.len();
    let mut out = TensorElement::zero(n);
    if n == 0 {
        return out;
    }
    let last = w[n - 1];
    for k in 0..d.rows() {
        let c = d.get(k, last);
        if !c.is_zero() {
            let mut v = w.to_vec();
            v[n - 1] = k;
            out.add_scaled(c, &nested_bracket(&v));
        }
    }
    out
}

/// `p_D(v_1⊗⋯⊗v_n) = [v_1,[v_2,⋯,[v_{n−1},Dv_n]⋯]]`, with `p_D(1) = 0`.
pub fn p_d(d: &RationalMatrix, t: &TensorElement) -> Result<TensorElement> {
    check_operator(d, t)?;
    Ok(t.map_words(t.degree(), |w| p_d_word(d, w)))
}

/// Left side of the Wigner identity, `μ∘(p_D⊗Id)∘Δ(t)`.
pub fn wigner_lhs(d: &RationalMatrix, t: &TensorElement) -> Result<TensorElement> {
    check_operator(d, t)?;
    let mut memo: HashMap<Word, TensorElement> = HashMap::new();
    let mut out = TensorElement::zero(t.degree());
    for (a, b, c) in coproduct(t).terms() {
        if a.is_empty() {
            continue;
        }
        let pa = memo.entry(a.clone()).or_insert_with(|| p_d_word(d, a));
        out.add_scaled(c, &pa.tensor(&TensorElement::word(b.clone())));
    }
    Ok(out)
}

/// Whether `μ∘(p_D⊗Id)∘Δ(t) = D_n(t)` holds exactly.
pub fn wigner_check(d: &RationalMatrix, t: &TensorElement) -> Result<bool> {
    Ok(wigner_lhs(d, t)? == extend_d(d, t)?)
}

/// Whether `p_D(ω) = D_n(ω)` for `ω = i_n(coords)` in the given Lie basis.
pub fn friedrichs_check(d: &RationalMatrix, basis: &LieBasis, coords: &[Scalar]) -> Result<bool> {
    let omega = basis.include(coords)?;
    Ok(p_d(d, &omega)? == extend_d(d, &omega)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn coproduct_examples() {
        let dx = coproduct(&TensorElement::word(vec![0]));
        assert_eq!(dx.len(), 2);
        assert_eq!(dx.coefficient(&[0], &[]), int(1));
        assert_eq!(dx.coefficient(&[], &[0]), int(1));

        let dxy = coproduct(&TensorElement::word(vec![0, 1]));
        assert_eq!(dxy.len(), 4);
        assert_eq!(dxy.coefficient(&[0, 1], &[]), int(1));
        assert_eq!(dxy.coefficient(&[0], &[1]), int(1));
        assert_eq!(dxy.coefficient(&[1], &[0]), int(-1));
        assert_eq!(dxy.coefficient(&[], &[0, 1]), int(1));

        let unit = coproduct(&TensorElement::unit());
        assert_eq!(unit, TwoSidedTensor::term(vec![], vec![], int(1)));
    }

    #[test]
    fn mu_examples() {
        let xy = TwoSidedTensor::term(vec![0], vec![1], int(1));
        assert_eq!(mu(&xy).unwrap(), TensorElement::word(vec![0, 1]));
        let x = TensorElement::word(vec![0]);
        assert_eq!(mu(&coproduct(&x)).unwrap(), x.scaled(&int(2)));
        let omega = TensorElement::word(vec![1, 0, 1]);
        let left_unit = TwoSidedTensor::from_pair(&TensorElement::unit(), &omega);
        assert_eq!(mu(&left_unit).unwrap(), omega);
        let mut mixed = xy.clone();
        mixed.add_term(vec![0], vec![], int(1));
        assert!(mu(&mixed).is_err());
    }

    #[test]
    fn p_d_examples() {
        let d = RationalMatrix::from_i64(&[&[1, 2], &[-1, 0]]);
        let v = TensorElement::word(vec![1]);
        // D e_1 = 2 e_0
        assert_eq!(p_d(&d, &v).unwrap(), TensorElement::term(vec![0], int(2)));
        // p_D(x⊗y) = x⊗Dy + Dy⊗x with Dy = 2x
        let xy = TensorElement::word(vec![0, 1]);
        assert_eq!(p_d(&d, &xy).unwrap(), TensorElement::term(vec![0, 0], int(4)));
        assert!(p_d(&d, &TensorElement::unit()).unwrap().is_zero());
        let id = RationalMatrix::identity(2);
        let w = TensorElement::word(vec![0, 1, 1]);
        assert_eq!(p_d(&id, &w).unwrap(), nested_bracket(&[0, 1, 1]));
        assert!(p_d(&RationalMatrix::identity(1), &xy).is_err());
    }

    #[test]
    fn wigner_small_cases() {
        let d = RationalMatrix::from_i64(&[&[0, 1], &[2, -1]]);
        assert!(wigner_check(&d, &TensorElement::word(vec![1])).unwrap());
        assert!(wigner_check(&d, &TensorElement::word(vec![0, 1])).unwrap());
        let t = TensorElement::from_terms(3, [(vec![0, 1, 1], int(2)), (vec![1, 0, 0], int(-1))]).unwrap();
        assert!(wigner_check(&d, &t).unwrap());
    }

    #[test]
    fn friedrichs_zero_operator() {
        let basis = crate::tensor::lie_basis(2, 3, &crate::Caps::default()).unwrap();
        let coords = vec![int(1); basis.dim()];
        assert!(friedrichs_check(&RationalMatrix::zeros(2, 2), &basis, &coords).unwrap());
        assert!(friedrichs_check(&RationalMatrix::identity(2), &basis, &coords).unwrap());
    }
}
