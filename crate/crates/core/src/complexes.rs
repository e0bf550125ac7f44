//! The Loday complex `CL_*(h)`, the subcomplex `L(h,1)_*` of free graded Lie
//! brackets with its induced boundary `δ`, and their homologies `HL_*` and
//! `Li_*`.
//!
//! Chain groups are tensor powers of `h` with words over the basis of `h` as
//! coordinates. Boundaries are applied word by word and stored column-sparse;
//! dense matrices are produced on request.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::linalg::{kernel_basis, sign, RationalMatrix, SparseMatrix, SparseVec};
use crate::tensor::{all_words, lie_basis, word_index, LieBasis, TensorElement, Word, WordSpace};

fn check_letters(a: &LeibnizAlgebra, t: &TensorElement) -> Result<()> {
    if t.letter_bound() > a.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "tensor uses basis index {} of a {}-dimensional algebra",
            t.letter_bound() - 1,
            a.dimension()
        )));
    }
    Ok(())
}

fn boundary_word(a: &LeibnizAlgebra, w: &[usize]) -> TensorElement {
    let n = w.len();
    let mut out = TensorElement::zero(n - 1);
    for i in 0..n {
        for j in i + 1..n {
            // (−1)^{j+1} with j counted from 1
            let s = sign(j);
            for (&k, c) in a.structure(w[i], w[j]) {
                let mut v = w.to_vec();
                v[i] = k;
                v.remove(j);
                out.add_term(v, &s * c);
            }
        }
    }
    out
}

/// The Loday boundary
/// `d(x_1⊗⋯⊗x_n) = Σ_{i<j} (−1)^{j+1} x_1⊗⋯⊗{x_i,x_j}⊗⋯⊗x̂_j⊗⋯⊗x_n`
/// applied to a tensor of degree `n ≥ 1`; `d` is zero on `h = CL_1`.
pub fn loday_boundary(a: &LeibnizAlgebra, t: &TensorElement) -> Result<TensorElement> {
    check_letters(a, t)?;
    match t.degree() {
        0 => Err(Error::InvalidArgument("the Loday boundary starts in degree 1".into())),
        1 => Ok(TensorElement::zero(0)),
        n => Ok(t.map_words(n - 1, |w| boundary_word(a, w))),
    }
}

/// `f^n(x_1⊗⋯⊗x_{n+1}) = x_1⊗⋯⊗x_{n−1}⊗{x_n,x_{n+1}}` on a tensor of degree `n+1 ≥ 2`.
pub fn bracket_last(a: &LeibnizAlgebra, t: &TensorElement) -> Result<TensorElement> {
    check_letters(a, t)?;
    let m = t.degree();
    if m < 2 {
        return Err(Error::InvalidArgument("f^n needs a tensor of degree at least 2".into()));
    }
    Ok(t.map_words(m - 1, |w| {
        let mut out = TensorElement::zero(m - 1);
        for (&k, c) in a.structure(w[m - 2], w[m - 1]) {
            let mut v = w[..m - 1].to_vec();
            v[m - 2] = k;
            out.add_term(v, c.clone());
        }
        out
    }))
}

/// Matrix of a degree-`n` word map into degree `out` tensors over `dim`
/// letters, both in lexicographic word coordinates.
fn word_map_matrix(
    dim: usize,
    n: usize,
    out: usize,
    f: impl Fn(&[usize]) -> TensorElement,
) -> SparseMatrix {
    let columns = all_words(dim, n)
        .iter()
        .map(|w| f(w).to_sparse(|v| word_index(v, dim)))
        .collect();
    SparseMatrix::new(dim.pow(out as u32), columns).expect("words index their own space")
}

/// Column-sparse matrix of `d: h^{⊗n} → h^{⊗(n−1)}`; for `n = 1` the
/// `1 × dim h` zero map onto `K`.
pub fn loday_d_sparse(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<SparseMatrix> {
    let dim = a.dimension();
    match n {
        0 => Err(Error::InvalidArgument("the Loday boundary starts in degree 1".into())),
        1 => Ok(SparseMatrix::zeros(1, dim)),
        _ => {
            caps.check_power(&format!("CL_{n} of {}", a.name()), dim, n)?;
            Ok(word_map_matrix(dim, n, n - 1, |w| boundary_word(a, w)))
        }
    }
}

pub fn loday_d(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<RationalMatrix> {
    Ok(loday_d_sparse(a, n, caps)?.to_dense())
}

/// Matrix of `f^n: h^{⊗(n+1)} → h^{⊗n}`.
pub fn f_map(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<RationalMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("f^n needs n >= 1".into()));
    }
    caps.check_power(&format!("CL_{} of {}", n + 1, a.name()), a.dimension(), n + 1)?;
    let m = word_map_matrix(a.dimension(), n + 1, n, |w| {
        bracket_last(a, &TensorElement::word(w.to_vec())).expect("letters are in range")
    });
    Ok(m.to_dense())
}

/// `δ = p ∘ f ∘ i` from `source` (degree `n+1`) to `target` (degree `n`),
/// in the Lie coordinates of both bases.
fn delta_between(a: &LeibnizAlgebra, source: &LieBasis, target: &LieBasis) -> Result<SparseMatrix> {
    let columns = source
        .columns()
        .iter()
        .map(|c| {
            let coords = target.project_p(&bracket_last(a, c)?)?;
            Ok(coords
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect::<SparseVec>())
        })
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::new(target.dim(), columns)
}

fn lie_bases(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<(std::sync::Arc<LieBasis>, std::sync::Arc<LieBasis>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("δ_n needs n >= 1".into()));
    }
    Ok((lie_basis(a.dimension(), n + 1, caps)?, lie_basis(a.dimension(), n, caps)?))
}

/// Matrix of `δ_n: L(h,1)_{n+1} → L(h,1)_n` in canonical Lie bases.
pub fn delta(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<RationalMatrix> {
    let (source, target) = lie_bases(a, n, caps)?;
    Ok(delta_between(a, &source, &target)?.to_dense())
}

/// Whether `d ∘ i_{n+1} = (−1)^n i_n ∘ δ_n` holds exactly.
pub fn commutation_check(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<bool> {
    let (source, target) = lie_bases(a, n, caps)?;
    let delta = delta_between(a, &source, &target)?;
    let s = sign(n);
    for (c, col) in source.columns().iter().zip(delta.columns()) {
        let lhs = loday_boundary(a, c)?;
        let mut coords = vec![crate::linalg::zero(); target.dim()];
        for (&r, x) in col {
            coords[r] = &s * x;
        }
        if lhs != target.include(&coords)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `d` maps every basis vector of `L(h,1)_n` into `L(h,1)_{n−1}`.
pub fn closure_check(a: &LeibnizAlgebra, n: usize, caps: &Caps) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument("closure is checked from degree 2".into()));
    }
    let source = lie_basis(a.dimension(), n, caps)?;
    let target = lie_basis(a.dimension(), n - 1, caps)?;
    for c in source.columns() {
        if !target.contains(&loday_boundary(a, c)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite stretch `C_lo ← ⋯ ← C_hi` of a chain complex.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    degrees: Vec<(usize, usize)>,
    /// Keyed by source degree: `d_n: C_n → C_{n−1}`.
    boundaries: BTreeMap<usize, SparseMatrix>,
}

impl ChainComplexData {
    /// Checks shapes and `d_{n−1} ∘ d_n = 0` for every stored pair.
    pub fn new(degrees: Vec<(usize, usize)>, boundaries: BTreeMap<usize, SparseMatrix>) -> Result<Self> {
        if degrees.windows(2).any(|p| p[1].0 != p[0].0 + 1) {
            return Err(Error::InvalidArgument("chain degrees must be consecutive".into()));
        }
        let dim_of: BTreeMap<usize, usize> = degrees.iter().copied().collect();
        for (&n, d) in &boundaries {
            let (Some(&src), Some(&dst)) = (dim_of.get(&n), n.checked_sub(1).and_then(|m| dim_of.get(&m))) else {
                return Err(Error::InvalidArgument(format!("boundary d_{n} leaves the stored degrees")));
            };
            if d.cols() != src || d.rows() != dst {
                return Err(Error::DimensionMismatch(format!(
                    "d_{n} is {}x{}, expected {dst}x{src}",
                    d.rows(),
                    d.cols()
                )));
            }
            if let Some(next) = boundaries.get(&(n - 1)) {
                if !next.compose(d)?.is_zero() {
                    return Err(Error::Internal(format!("d_{} ∘ d_{n} is not zero", n - 1)));
                }
            }
        }
        Ok(ChainComplexData { degrees, boundaries })
    }

    pub fn degrees(&self) -> &[(usize, usize)] {
        &self.degrees
    }

    pub fn dimension(&self, n: usize) -> Option<usize> {
        self.degrees.iter().find(|&&(m, _)| m == n).map(|&(_, d)| d)
    }

    pub fn boundary(&self, n: usize) -> Option<&SparseMatrix> {
        self.boundaries.get(&n)
    }

    pub fn boundary_matrix(&self, n: usize) -> Option<RationalMatrix> {
        self.boundary(n).map(SparseMatrix::to_dense)
    }

    /// Basis of the cycles in degree `n` as columns.
    pub fn cycles(&self, n: usize) -> Option<RationalMatrix> {
        let dim = self.dimension(n)?;
        Some(match self.boundary(n) {
            Some(d) => kernel_basis(&d.to_dense()),
            None => RationalMatrix::identity(dim),
        })
    }

    /// Homology in every stored degree except the top one, whose incoming
    /// boundary is not part of the data. A missing boundary counts as zero.
    pub fn homology(&self, weight: Option<usize>) -> HomologyReport {
        let ranks: BTreeMap<usize, usize> = self.boundaries.iter().map(|(&n, d)| (n, d.rank())).collect();
        let rank = |n: usize| ranks.get(&n).copied().unwrap_or(0);
        let rows = self
            .degrees
            .iter()
            .take(self.degrees.len().saturating_sub(1))
            .map(|&(n, dim)| {
                let kernel = dim - rank(n);
                HomologyRow {
                    degree: n,
                    chain_dim: dim,
                    boundary_rank: rank(n),
                    kernel_dim: kernel,
                    homology_dim: kernel - rank(n + 1),
                }
            })
            .collect();
        HomologyReport { weight, rows }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRow {
    pub degree: usize,
    pub chain_dim: usize,
    /// Rank of the boundary leaving this degree.
    pub boundary_rank: usize,
    pub kernel_dim: usize,
    pub homology_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<usize>,
    pub rows: Vec<HomologyRow>,
}

impl HomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.homology_dim).collect()
    }

    pub fn row(&self, degree: usize) -> Option<&HomologyRow> {
        self.rows.iter().find(|r| r.degree == degree)
    }
}

/// `CL_0 = K ← h ← ⋯ ← h^{⊗top}`.
pub fn cl_complex(a: &LeibnizAlgebra, top: usize, caps: &Caps) -> Result<ChainComplexData> {
    if top == 0 {
        return Err(Error::InvalidArgument("the Loday complex needs top degree >= 1".into()));
    }
    let dim = a.dimension();
    caps.check_power(&format!("CL_{top} of {}", a.name()), dim, top)?;
    let degrees = (0..=top).map(|n| (n, dim.pow(n as u32))).collect();
    let boundaries = (1..=top)
        .map(|n| Ok((n, loday_d_sparse(a, n, caps)?)))
        .collect::<Result<_>>()?;
    ChainComplexData::new(degrees, boundaries)
}

/// `HL_n(h)` for `0 ≤ n ≤ max_degree`.
pub fn hl_homology(a: &LeibnizAlgebra, max_degree: usize, caps: &Caps) -> Result<HomologyReport> {
    Ok(cl_complex(a, max_degree + 1, caps)?.homology(None))
}

/// `L(h,1)_1 ← ⋯ ← L(h,1)_top` on the given coordinate spaces (one per
/// degree from 1). There is no degree-0 term.
fn li_complex_on(a: &LeibnizAlgebra, bases: &[std::sync::Arc<LieBasis>]) -> Result<ChainComplexData> {
    let degrees = bases.iter().enumerate().map(|(k, b)| (k + 1, b.dim())).collect();
    let boundaries = bases
        .windows(2)
        .enumerate()
        .map(|(k, pair)| Ok((k + 2, delta_between(a, &pair[1], &pair[0])?)))
        .collect::<Result<_>>()?;
    ChainComplexData::new(degrees, boundaries)
}

/// `L(h,1)_1 ← ⋯ ← L(h,1)_top` with `δ_{n−1}` stored as the boundary out of degree `n`.
pub fn li_complex(a: &LeibnizAlgebra, top: usize, caps: &Caps) -> Result<ChainComplexData> {
    if top == 0 {
        return Err(Error::InvalidArgument("the Lie subcomplex needs top degree >= 1".into()));
    }
    let bases = (1..=top)
        .map(|n| lie_basis(a.dimension(), n, caps))
        .collect::<Result<Vec<_>>>()?;
    li_complex_on(a, &bases)
}

/// `Li_n(h)` for `1 ≤ n ≤ max_degree`.
pub fn li_homology(a: &LeibnizAlgebra, max_degree: usize, caps: &Caps) -> Result<HomologyReport> {
    Ok(li_complex(a, max_degree + 1, caps)?.homology(None))
}

/// Words of `n` basis letters whose weights sum to `w`, lexicographically.
fn weighted_words(weights: &[u32], n: usize, w: usize) -> Vec<Word> {
    fn extend(weights: &[u32], n: usize, left: usize, prefix: &mut Word, out: &mut Vec<Word>) {
        if prefix.len() == n {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let slots = n - prefix.len();
        for (l, &wt) in weights.iter().enumerate() {
            let wt = wt as usize;
            // every remaining letter has weight at least 1
            if wt + (slots - 1) <= left {
                prefix.push(l);
                extend(weights, n, left - wt, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(weights, n, w, &mut Vec::new(), &mut out);
    out
}

/// `Li_n(h)` in weight `w` for `1 ≤ n ≤ min(max_degree, w)`, for a
/// weight-graded algebra whose top weight is at least `w`.
///
/// Chains are Lie brackets of words of total weight `w`; the bracket adds
/// weights, so `δ` preserves this piece and never reaches truncated brackets.
pub fn weight_graded_li(
    a: &LeibnizAlgebra,
    max_degree: usize,
    w: usize,
    caps: &Caps,
) -> Result<HomologyReport> {
    let weights = a
        .weights()
        .ok_or_else(|| Error::InvalidArgument(format!("{} carries no weight grading", a.name())))?;
    let top_weight = weights.iter().copied().max().unwrap_or(0) as usize;
    if w == 0 || w > top_weight {
        return Err(Error::InvalidArgument(format!(
            "weight {w} outside 1..={top_weight} for {}",
            a.name()
        )));
    }
    if max_degree == 0 {
        return Err(Error::InvalidArgument("max degree must be at least 1".into()));
    }
    let top = max_degree.min(w) + 1;
    let bases = (1..=top)
        .map(|n| {
            let words = weighted_words(weights, n, w);
            caps.check_count(
                &format!("weight-{w} part of CL_{n} of {}", a.name()),
                words.len() as u128,
            )?;
            Ok(std::sync::Arc::new(LieBasis::spanning(WordSpace::from_words(
                a.dimension(),
                n,
                words,
            )?)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(li_complex_on(a, &bases)?.homology(Some(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{builtin, free_leibniz};
    use crate::linalg::int;
    use crate::tensor::nested_bracket;

    fn caps() -> Caps {
        Caps::default()
    }

    fn t(terms: &[(&[usize], i64)]) -> TensorElement {
        let degree = terms[0].0.len();
        TensorElement::from_terms(degree, terms.iter().map(|(w, c)| (w.to_vec(), int(*c)))).unwrap()
    }

    #[test]
    fn boundary_in_low_degrees() {
        // nil3: {x,x} = z, {x,y} = z, {y,y} = −z
        let a = builtin("nil3").unwrap();
        let (x, y, z) = (0, 1, 2);
        assert_eq!(loday_boundary(&a, &t(&[(&[x, y], 1)])).unwrap(), t(&[(&[z], -1)]));
        // d(x⊗y⊗x) = −{x,y}⊗x + {x,x}⊗y + x⊗{y,x} = −z⊗x + z⊗y
        assert_eq!(
            loday_boundary(&a, &t(&[(&[x, y, x], 1)])).unwrap(),
            t(&[(&[z, x], -1), (&[z, y], 1)])
        );
        assert!(loday_boundary(&a, &t(&[(&[x], 1)])).unwrap().is_zero());
    }

    #[test]
    fn degree_one_boundary_is_zero_row() {
        let a = builtin("A2").unwrap();
        let d1 = loday_d(&a, 1, &caps()).unwrap();
        assert_eq!((d1.rows(), d1.cols()), (1, 2));
        assert!(d1.is_zero());
        assert!(loday_d(&builtin("abelian-2").unwrap(), 3, &caps()).unwrap().is_zero());
    }

    #[test]
    fn f_map_examples() {
        let a = builtin("A2").unwrap();
        let f1 = f_map(&a, 1, &caps()).unwrap();
        // f¹(x⊗x) = y
        assert_eq!(f1.column(0), vec![int(0), int(1)]);
        let f2 = bracket_last(&a, &t(&[(&[0, 0, 0], 1)])).unwrap();
        assert_eq!(f2, t(&[(&[0, 1], 1)]));
        assert!(f_map(&builtin("abelian-2").unwrap(), 2, &caps()).unwrap().is_zero());
    }

    #[test]
    fn delta_one_on_a_bracket() {
        let a = builtin("rsolv2").unwrap();
        let source = lie_basis(2, 2, &caps()).unwrap();
        let target = lie_basis(2, 1, &caps()).unwrap();
        let delta = delta_between(&a, &source, &target).unwrap();
        // δ_1([x,y]) = {x,y} + {y,x} = x
        let xy = nested_bracket(&[0, 1]);
        let coords = source.coordinates(&xy).unwrap();
        let image = delta.apply(&coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
        assert_eq!(image, [(0, int(1))].into());
    }

    #[test]
    fn homology_examples() {
        let ab = builtin("abelian-2").unwrap();
        assert_eq!(hl_homology(&ab, 3, &caps()).unwrap().dims(), [1, 2, 4, 8]);
        assert_eq!(li_homology(&ab, 4, &caps()).unwrap().dims(), [2, 3, 2, 3]);

        let a2 = builtin("A2").unwrap();
        assert_eq!(hl_homology(&a2, 2, &caps()).unwrap().row(1).unwrap().homology_dim, 1);
        assert_eq!(li_homology(&a2, 2, &caps()).unwrap().rows[0].homology_dim, 1);

        let sl2 = builtin("sl2").unwrap();
        assert_eq!(li_homology(&sl2, 2, &caps()).unwrap().rows[0].homology_dim, 3);
    }

    #[test]
    fn commutation_and_closure_small() {
        for name in ["A2", "abelian-2", "nil3"] {
            let a = builtin(name).unwrap();
            for n in 1..=3 {
                assert!(commutation_check(&a, n, &caps()).unwrap(), "{name} {n}");
                assert!(closure_check(&a, n + 1, &caps()).unwrap(), "{name} {n}");
            }
        }
    }

    #[test]
    fn chain_complex_rejects_nonzero_square() {
        let d1 = SparseMatrix::from_dense(&RationalMatrix::from_i64(&[&[1]]));
        let d2 = SparseMatrix::from_dense(&RationalMatrix::from_i64(&[&[1]]));
        let err = ChainComplexData::new(vec![(0, 1), (1, 1), (2, 1)], [(1, d1), (2, d2)].into());
        assert!(matches!(err, Err(Error::Internal(_))));
    }

    #[test]
    fn weighted_word_counts() {
        let a = free_leibniz(2, 4, &caps()).unwrap();
        for n in 1..=4 {
            let count = weighted_words(a.weights().unwrap(), n, 4).len();
            let binom = [1, 3, 3, 1][n - 1];
            assert_eq!(count, 16 * binom);
        }
    }

    #[test]
    fn weight_graded_examples() {
        let free1 = free_leibniz(1, 2, &caps()).unwrap();
        let w1 = weight_graded_li(&free1, 2, 1, &caps()).unwrap();
        assert_eq!(w1.dims(), [1]);
        let w2 = weight_graded_li(&free1, 2, 2, &caps()).unwrap();
        assert_eq!(w2.row(2).unwrap().chain_dim, 1);
        assert_eq!(w2.row(2).unwrap().homology_dim, 0);

        let free2 = free_leibniz(2, 4, &caps()).unwrap();
        let li1: Vec<usize> = (1..=4)
            .map(|w| weight_graded_li(&free2, 1, w, &caps()).unwrap().rows[0].homology_dim)
            .collect();
        assert_eq!(li1, [2, 1, 2, 3]);
        assert!(weight_graded_li(&free2, 2, 5, &caps()).is_err());
        assert!(weight_graded_li(&builtin("A2").unwrap(), 2, 1, &caps()).is_err());
    }
}
