//! Eulerian idempotents in `ℚ[S_n]` and their action on tensor powers.
//!
//! Permutations are stored 0-based in one-line form, and the product is
//! composition: `(σ·τ)(j) = σ(τ(j))`. A permutation acts on tensor positions
//! by `σ·(v_1⊗⋯⊗v_n) = v_{σ⁻¹(1)}⊗⋯⊗v_{σ⁻¹(n)}`, i.e. the letter in
//! position `j` moves to position `σ(j)`; this is a left action.
//!
//! `e_n^{(1)}` is given by the descent formula and
//! `e_n^{(i)} = (e^{(1)})^{*i} / i!`, where `f * g` sums shuffles composed
//! with the block placement of `f` and `g`. Every family is certified
//! (complete and orthogonal) before it is used for a conjecture run.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{
    column_space, one, subspace_contained, subspace_sum, RationalMatrix, Scalar,
};
use crate::tensor::{all_words, lie_basis, word_index};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From 0-based images; `None` unless a bijection of `0..n`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        Self::new(images.iter().map(|&i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i] = j;
        }
        Permutation(inv)
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    pub fn sign(&self) -> Scalar {
        crate::linalg::sign(self.inversions())
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn extend(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == n {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    extend(n, prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// `σ × τ` acting on `0..p` and `p..p+q` separately.
    pub fn block(&self, other: &Self) -> Self {
        let p = self.degree();
        Permutation(self.0.iter().copied().chain(other.0.iter().map(|&j| j + p)).collect())
    }
}

/// Number of positions `k` with `p(k) > p(k+1)`.
pub fn descent_count(p: &Permutation) -> usize {
    p.images().windows(2).filter(|w| w[0] > w[1]).count()
}

/// `(p, q)`-shuffles: permutations increasing on `0..p` and on `p..p+q`.
fn shuffles(p: usize, q: usize) -> Vec<Permutation> {
    let n = p + q;
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).collect();
        let second = (0..n).filter(|k| mask >> k & 1 == 0);
        out.push(Permutation(first.into_iter().chain(second).collect()));
    }
    out
}

/// A rational combination of permutations of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Permutation::identity(n), one());
        e
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: Scalar) {
        assert_eq!(p.degree(), self.n, "permutation degree mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coefficient(&self, p: &Permutation) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut out = Self::zero(self.n);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), factor * c);
        }
        out
    }

    /// Product under composition, `Σ a_σ b_τ (σ∘τ)`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "group algebra degree mismatch");
        let mut acc: HashMap<Permutation, Scalar> = HashMap::new();
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                *acc.entry(s.compose(t)).or_insert_with(Scalar::zero) += a * b;
            }
        }
        let mut out = Self::zero(self.n);
        for (p, c) in acc {
            out.add_term(p, c);
        }
        out
    }

    /// `Σ_{shuffles} sh ∘ (self × other)`.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut block: HashMap<Permutation, Scalar> = HashMap::new();
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                *block.entry(s.block(t)).or_insert_with(Scalar::zero) += a * b;
            }
        }
        let mut acc: HashMap<Permutation, Scalar> = HashMap::new();
        for sh in shuffles(self.n, other.n) {
            for (p, c) in &block {
                *acc.entry(sh.compose(p)).or_insert_with(Scalar::zero) += c;
            }
        }
        let mut out = Self::zero(self.n + other.n);
        for (p, c) in acc {
            out.add_term(p, c);
        }
        out
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `e_n^{(1)} = Σ_σ ((−1)^{d(σ)}/n)·binom(n−1, d(σ))^{−1}·σ`.
pub fn euler_first(n: usize) -> Result<GroupAlgebraElement> {
    if n == 0 {
        return Err(Error::InvalidArgument("Eulerian idempotents need n >= 1".into()));
    }
    let mut e = GroupAlgebraElement::zero(n);
    for p in Permutation::all(n) {
        let d = descent_count(&p);
        let denom = BigInt::from(n) * binomial(n - 1, d);
        let c = Scalar::new(BigInt::from(if d % 2 == 0 { 1 } else { -1 }), denom);
        e.add_term(p, c);
    }
    Ok(e)
}

type IdempotentCache = Mutex<HashMap<(usize, usize), Arc<GroupAlgebraElement>>>;

fn cache() -> &'static IdempotentCache {
    static CACHE: OnceLock<IdempotentCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `(e^{(1)})^{*i}` restricted to degree `n`, built as
/// `Σ_p e_p^{(1)} * P_{i−1}(n − p)`.
fn convolution_power(n: usize, i: usize) -> Result<GroupAlgebraElement> {
    if i == 1 {
        return euler_first(n);
    }
    let mut out = GroupAlgebraElement::zero(n);
    for p in 1..=n - (i - 1) {
        let head = euler_first(p)?;
        let tail = convolution_power(n - p, i - 1)?;
        out = out.add(&head.convolve(&tail));
    }
    Ok(out)
}

/// `e_n^{(i)}`, memoized process-wide.
pub fn euler_idempotent(n: usize, i: usize) -> Result<Arc<GroupAlgebraElement>> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "Eulerian idempotent e_{n}^({i}) needs 1 <= i <= n"
        )));
    }
    if let Some(hit) = cache().lock().expect("idempotent cache poisoned").get(&(n, i)) {
        return Ok(hit.clone());
    }
    let factorial: BigInt = (1..=i).map(BigInt::from).product();
    let e = convolution_power(n, i)?.scaled(&Scalar::new(BigInt::one(), factorial));
    let mut guard = cache().lock().expect("idempotent cache poisoned");
    Ok(guard.entry((n, i)).or_insert_with(|| Arc::new(e)).clone())
}

/// The family `e_n^{(1)}, …, e_n^{(n)}`.
#[derive(Clone, Debug)]
pub struct EulerianFamily {
    n: usize,
    members: Vec<Arc<GroupAlgebraElement>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub degree: usize,
    /// `Σ_i e^{(i)} = id`.
    pub complete: bool,
    /// `e^{(i)} e^{(j)} = δ_{ij} e^{(i)}`.
    pub orthogonal: bool,
}

impl Certification {
    pub fn passed(&self) -> bool {
        self.complete && self.orthogonal
    }
}

impl EulerianFamily {
    pub fn new(n: usize) -> Result<Self> {
        let members = (1..=n).map(|i| euler_idempotent(n, i)).collect::<Result<_>>()?;
        Ok(EulerianFamily { n, members })
    }

    /// A family from explicit elements, e.g. to exercise the certification guard.
    pub fn from_members(n: usize, members: Vec<GroupAlgebraElement>) -> Result<Self> {
        if members.len() != n || members.iter().any(|m| m.degree() != n) {
            return Err(Error::InvalidArgument(format!(
                "a degree-{n} family needs {n} elements of degree {n}"
            )));
        }
        Ok(EulerianFamily {
            n,
            members: members.into_iter().map(Arc::new).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `e^{(i)}` for `1 ≤ i ≤ n`.
    pub fn member(&self, i: usize) -> &GroupAlgebraElement {
        &self.members[i - 1]
    }

    pub fn members(&self) -> impl Iterator<Item = &GroupAlgebraElement> {
        self.members.iter().map(|m| m.as_ref())
    }

    pub fn certify(&self) -> Certification {
        let sum = self
            .members()
            .fold(GroupAlgebraElement::zero(self.n), |acc, e| acc.add(e));
        let complete = sum == GroupAlgebraElement::identity(self.n);
        let orthogonal = self.members.iter().enumerate().all(|(i, a)| {
            self.members.iter().enumerate().all(|(j, b)| {
                let prod = a.multiply(b);
                if i == j {
                    prod == **a
                } else {
                    prod.is_zero()
                }
            })
        });
        Certification {
            degree: self.n,
            complete,
            orthogonal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Unsigned,
    /// Each permutation also multiplies by its sign (Koszul signs of degree-1 letters).
    Signed,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Unsigned => "unsigned",
            Convention::Signed => "signed",
        }
    }
}

/// Matrix of `e` acting on `V^{⊗n}` in lexicographic word coordinates.
pub fn action_matrix(
    e: &GroupAlgebraElement,
    dim_v: usize,
    convention: Convention,
    caps: &Caps,
) -> Result<RationalMatrix> {
    let n = e.degree();
    caps.check_power(&format!("V^(⊗{n}) with dim V = {dim_v}"), dim_v, n)?;
    let size = dim_v.pow(n as u32);
    let mut m = RationalMatrix::zeros(size, size);
    let words = all_words(dim_v, n);
    for (p, c) in e.terms() {
        let c = match convention {
            Convention::Unsigned => c.clone(),
            Convention::Signed => c * p.sign(),
        };
        for (col, w) in words.iter().enumerate() {
            let mut image = vec![0; n];
            for (j, &l) in w.iter().enumerate() {
                image[p.images()[j]] = l;
            }
            m.add_to(word_index(&image, dim_v), col, &c);
        }
    }
    Ok(m)
}

/// Column basis of the image of `e` on `V^{⊗n}`.
pub fn image_basis(
    e: &GroupAlgebraElement,
    dim_v: usize,
    convention: Convention,
    caps: &Caps,
) -> Result<RationalMatrix> {
    Ok(column_space(&action_matrix(e, dim_v, convention, caps)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conjecture2Verdict {
    pub degree: usize,
    pub i: usize,
    pub convention: Convention,
    pub image_dim: usize,
    /// `dim d(Im e_n^{(i)})`.
    pub boundary_rank: usize,
    /// `dim (Im e_{n−1}^{(1)} ⊕ ⋯ ⊕ Im e_{n−1}^{(min(i, n−1))})`.
    pub target_dim: usize,
    pub contained: bool,
}

/// `d(Im e_n^{(i)}) ⊆ Σ_{j ≤ min(i, n−1)} Im e_{n−1}^{(j)}` for each `i`,
/// using the given families, which are certified first.
pub fn conjecture2_with(
    a: &LeibnizAlgebra,
    upper: &EulerianFamily,
    lower: &EulerianFamily,
    convention: Convention,
    caps: &Caps,
) -> Result<Vec<Conjecture2Verdict>> {
    let n = upper.degree();
    if n < 2 || lower.degree() + 1 != n {
        return Err(Error::InvalidArgument(format!(
            "conjecture 2 compares degrees n >= 2 and n − 1, got {n} and {}",
            lower.degree()
        )));
    }
    for family in [upper, lower] {
        let cert = family.certify();
        if !cert.passed() {
            return Err(Error::Certification(format!(
                "Eulerian family in degree {} failed certification (complete: {}, orthogonal: {})",
                cert.degree, cert.complete, cert.orthogonal
            )));
        }
    }
    let dim = a.dimension();
    let d = crate::complexes::loday_d(a, n, caps)?;
    let lower_images = lower
        .members()
        .map(|e| image_basis(e, dim, convention, caps))
        .collect::<Result<Vec<_>>>()?;
    let ambient = dim.pow((n - 1) as u32);
    (1..=n)
        .map(|i| {
            let image = image_basis(upper.member(i), dim, convention, caps)?;
            let boundary = d.checked_mul(&image)?;
            let target = subspace_sum(ambient, &lower_images[..i.min(n - 1)])?;
            Ok(Conjecture2Verdict {
                degree: n,
                i,
                convention,
                image_dim: image.cols(),
                boundary_rank: boundary.rank(),
                target_dim: target.cols(),
                contained: subspace_contained(&boundary, &target)?,
            })
        })
        .collect()
}

pub fn conjecture2_check(
    a: &LeibnizAlgebra,
    n: usize,
    convention: Convention,
    caps: &Caps,
) -> Result<Vec<Conjecture2Verdict>> {
    if n < 2 {
        return Err(Error::InvalidArgument("conjecture 2 needs n >= 2".into()));
    }
    conjecture2_with(a, &EulerianFamily::new(n)?, &EulerianFamily::new(n - 1)?, convention, caps)
}

/// Comparison of `Im e_n^{(1)}` (signed action) with `L(V,1)_n`. Reported as
/// data; no identification is assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LieLink {
    pub dim_v: usize,
    pub degree: usize,
    pub idempotent_rank: usize,
    pub lie_dim: usize,
    pub equal: bool,
}

pub fn lie_link(dim_v: usize, n: usize, caps: &Caps) -> Result<LieLink> {
    let image = image_basis(&*euler_idempotent(n, 1)?, dim_v, Convention::Signed, caps)?;
    let lie = lie_basis(dim_v, n, caps)?.inclusion();
    let equal = subspace_contained(&image, &lie)? && subspace_contained(&lie, &image)?;
    Ok(LieLink {
        dim_v,
        degree: n,
        idempotent_rank: image.cols(),
        lie_dim: lie.cols(),
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::builtin;
    use crate::linalg::{int, ratio};

    fn perm(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    #[test]
    fn descents() {
        assert_eq!(descent_count(&perm(&[1, 2, 3])), 0);
        assert_eq!(descent_count(&perm(&[3, 2, 1])), 2);
        assert_eq!(descent_count(&perm(&[1, 3, 2])), 1);
        assert!(Permutation::from_one_line(&[1, 1]).is_none());
    }

    #[test]
    fn first_idempotent_small() {
        let e1 = euler_first(1).unwrap();
        assert_eq!(e1, GroupAlgebraElement::identity(1));
        let e2 = euler_first(2).unwrap();
        assert_eq!(e2.coefficient(&perm(&[1, 2])), ratio(1, 2));
        assert_eq!(e2.coefficient(&perm(&[2, 1])), ratio(-1, 2));
        let e3 = euler_first(3).unwrap();
        assert_eq!(e3.len(), 6);
        assert_eq!(e3.multiply(&e3), e3);
    }

    #[test]
    fn top_idempotent_degree_two() {
        let e = euler_idempotent(2, 2).unwrap();
        let mut expected = GroupAlgebraElement::zero(2);
        expected.add_term(perm(&[1, 2]), ratio(1, 2));
        expected.add_term(perm(&[2, 1]), ratio(1, 2));
        assert_eq!(*e, expected);
        assert!(euler_idempotent(2, 3).is_err());
        assert!(euler_idempotent(2, 0).is_err());
    }

    #[test]
    fn certification_up_to_four() {
        for n in 1..=4 {
            let cert = EulerianFamily::new(n).unwrap().certify();
            assert!(cert.passed(), "{cert:?}");
        }
    }

    #[test]
    fn corrupted_family_fails() {
        let mut members: Vec<GroupAlgebraElement> =
            EulerianFamily::new(3).unwrap().members().cloned().collect();
        members[0] = members[0].scaled(&int(2));
        let bad = EulerianFamily::from_members(3, members).unwrap();
        assert!(!bad.certify().passed());
        let a = builtin("A2").unwrap();
        let lower = EulerianFamily::new(2).unwrap();
        let err = conjecture2_with(&a, &bad, &lower, Convention::Signed, &Caps::default());
        assert!(matches!(err, Err(Error::Certification(_))));
    }

    #[test]
    fn action_examples() {
        let caps = Caps::default();
        let id = action_matrix(&GroupAlgebraElement::identity(3), 2, Convention::Signed, &caps).unwrap();
        assert_eq!(id, RationalMatrix::identity(8));
        let e = euler_first(2).unwrap();
        assert_eq!(action_matrix(&e, 2, Convention::Unsigned, &caps).unwrap().rank(), 1);
        assert_eq!(action_matrix(&e, 2, Convention::Signed, &caps).unwrap().rank(), 3);
    }

    #[test]
    fn action_is_a_left_action() {
        let caps = Caps::default();
        let s = perm(&[2, 3, 1]);
        let t = perm(&[2, 1, 3]);
        let single = |p: &Permutation| {
            let mut e = GroupAlgebraElement::zero(3);
            e.add_term(p.clone(), one());
            action_matrix(&e, 2, Convention::Unsigned, &caps).unwrap()
        };
        assert_eq!(&single(&s) * &single(&t), single(&s.compose(&t)));
        // the letter in position 1 moves to position σ(1) = 2
        let m = single(&s);
        let x_first = word_index(&[1, 0, 0], 2);
        assert_eq!(m.column(x_first)[word_index(&[0, 1, 0], 2)], int(1));
    }

    #[test]
    fn abelian_conjecture2_all_true() {
        let a = builtin("abelian-2").unwrap();
        for conv in [Convention::Signed, Convention::Unsigned] {
            let v = conjecture2_check(&a, 3, conv, &Caps::default()).unwrap();
            assert!(v.iter().all(|x| x.contained));
        }
    }
}
