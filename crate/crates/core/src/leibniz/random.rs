use super::{builtin, standard_builtins, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::sample::Sampler;

/// Brackets of generators landing in a central subspace; any such table
/// satisfies the Leibniz identity since every double bracket vanishes.
fn random_central(sampler: &mut Sampler, dim: usize) -> Result<LeibnizAlgebra> {
    let centre = 1 + sampler.below(dim.min(3) - 1);
    let gens = dim - centre;
    let mut brackets = Vec::new();
    for i in 0..gens {
        for j in 0..gens {
            let v: SparseVec = (gens..dim)
                .map(|k| (k, sampler.scalar()))
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            if !v.is_empty() {
                brackets.push(((i, j), v));
            }
        }
    }
    let basis = (0..dim).map(|i| format!("b{i}")).collect();
    LeibnizAlgebra::new("random-central", basis, brackets, None)
}

/// A seeded random Leibniz algebra of dimension at most `max_dim` (≥ 2):
/// either a small catalog algebra or a random central extension of an
/// abelian algebra, presented in a random basis. The result is validated.
pub fn random_leibniz(sampler: &mut Sampler, max_dim: usize) -> Result<LeibnizAlgebra> {
    if max_dim < 2 {
        return Err(Error::InvalidArgument(
            "random algebras need max_dim >= 2".into(),
        ));
    }
    let base = if sampler.below(2) == 0 {
        let small: Vec<LeibnizAlgebra> = standard_builtins()
            .into_iter()
            .map(builtin)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|a| a.dimension() <= max_dim)
            .collect();
        small[sampler.below(small.len())].clone()
    } else {
        let dim = 2 + sampler.below(max_dim - 1);
        random_central(sampler, dim)?
    };
    let p = sampler.invertible_matrix(base.dimension());
    let name = format!("random({})", base.name());
    let algebra = base.change_basis(&p)?.with_name(name);
    algebra.ensure_valid()?;
    Ok(algebra)
}
