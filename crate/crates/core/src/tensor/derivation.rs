use num_traits::Zero;

use super::TensorElement;
use crate::error::{Error, Result};
use crate::linalg::{sign, RationalMatrix};

fn check_operator(d: &RationalMatrix, t: &TensorElement) -> Result<()> {
    if d.rows() != d.cols() {
        return Err(Error::DimensionMismatch(format!(
            "operator on V must be square, got {}x{}",
            d.rows(),
            d.cols()
        )));
    }
    if t.letter_bound() > d.cols() {
        return Err(Error::DimensionMismatch(format!(
            "tensor uses letter {} but the operator acts on a {}-dimensional V",
            t.letter_bound() - 1,
            d.cols()
        )));
    }
    Ok(())
}

/// Calls `f(k, D[k][letter])` for each nonzero entry in column `letter`.
fn for_image(d: &RationalMatrix, letter: usize, mut f: impl FnMut(usize, &crate::linalg::Scalar)) {
    for k in 0..d.rows() {
        let c = d.get(k, letter);
        if !c.is_zero() {
            f(k, c);
        }
    }
}

/// Derivation extension `D_n(v_1⊗⋯⊗v_n) = Σ v_1⊗⋯⊗D(v_i)⊗⋯⊗v_n`.
/// The empty word maps to zero.
pub fn extend_d(d: &RationalMatrix, t: &TensorElement) -> Result<TensorElement> {
    check_operator(d, t)?;
    let n = t.degree();
    Ok(t.map_words(n, |w| {
        let mut out = TensorElement::zero(n);
        for i in 0..n {
            for_image(d, w[i], |k, c| {
                let mut v = w.to_vec();
                v[i] = k;
                out.add_term(v, c.clone());
            });
        }
        out
    }))
}

/// `D̃_n(v_1⊗⋯⊗v_n) = Σ_i (−1)^i D(v_i)⊗v_1⊗⋯⊗v̂_i⊗⋯⊗v_n`, positions counted from 1.
pub fn d_tilde(d: &RationalMatrix, t: &TensorElement) -> Result<TensorElement> {
    check_operator(d, t)?;
    if t.degree() == 0 {
        return Err(Error::InvalidArgument("D̃ needs degree at least 1".into()));
    }
    let n = t.degree();
    Ok(t.map_words(n, |w| {
        let mut out = TensorElement::zero(n);
        for i in 0..n {
            let s = sign(i + 1);
            for_image(d, w[i], |k, c| {
                let mut v = Vec::with_capacity(n);
                v.push(k);
                v.extend(w.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &l)| l));
                out.add_term(v, &s * c);
            });
        }
        out
    }))
}
