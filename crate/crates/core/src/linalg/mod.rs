//! Exact rational linear algebra.
//!
//! Everything here works over [`Scalar`], an arbitrary-precision rational kept
//! in lowest terms. Dense [`RationalMatrix`] values carry linear maps between
//! based spaces; [`Echelon`] is an incrementally maintained reduced row echelon
//! basis over sparse vectors, used when a spanning set is much larger than the
//! subspace it spans.

mod echelon;
mod matrix;
mod sparse;

pub use echelon::{sparse_axpy, Echelon, SparseVec};
pub use matrix::{
    column_space, kernel_basis, rref, subspace_contained, subspace_sum, RationalMatrix, Rref,
};
pub use sparse::SparseMatrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// `(-1)^k` as a scalar.
pub fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        one()
    } else {
        -one()
    }
}

/// Parses `[+-]digits[/digits]` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Scalar, String> {
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return Err(format!("invalid rational {text:?}: expected [sign]digits[/digits]"));
    }
    let mut numer: BigInt = num.parse().expect("digits parse");
    if negative {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => d.parse().expect("digits parse"),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("invalid rational {text:?}: zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Renders a scalar as `p/q`, or `p` when the denominator is one.
pub fn format_rational(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
