use super::{free_leibniz, LeibnizAlgebra};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{int, SparseVec};

const FIXED: &[&str] = &[
    "A2",
    "lie-nonabelian2",
    "rsolv2",
    "nil3",
    "sl2",
    "heisenberg",
    "sum4",
];

/// Catalog entries, with the parametrized families written as patterns.
pub fn catalog_names() -> Vec<String> {
    let mut names: Vec<String> = vec!["abelian-<d>".into()];
    names.extend(FIXED.iter().map(|s| s.to_string()));
    names.push("free-<g>-<W>".into());
    names
}

/// The fixed small algebras used for exhaustive checks (all of dimension ≤ 4).
pub fn standard_builtins() -> Vec<&'static str> {
    let mut v = vec!["abelian-2", "abelian-3"];
    v.extend_from_slice(FIXED);
    v
}

fn names(n: &[&str]) -> Vec<String> {
    n.iter().map(|s| s.to_string()).collect()
}

fn entry(i: usize, j: usize, value: &[(usize, i64)]) -> ((usize, usize), SparseVec) {
    ((i, j), value.iter().map(|&(k, c)| (k, int(c))).collect())
}

/// A catalog algebra by name; every entry is validated before it is returned.
pub fn builtin(name: &str) -> Result<LeibnizAlgebra> {
    let unknown = || Error::UnknownAlgebra {
        name: name.to_string(),
        catalog: catalog_names().join(", "),
    };
    if let Some(d) = name.strip_prefix("abelian-") {
        let d: usize = d.parse().map_err(|_| unknown())?;
        if d == 0 {
            return Err(unknown());
        }
        let basis = (0..d).map(|i| format!("e{i}")).collect();
        return LeibnizAlgebra::new_validated(name, basis, [], None);
    }
    if let Some(rest) = name.strip_prefix("free-") {
        let (g, w) = rest.split_once('-').ok_or_else(unknown)?;
        let g: usize = g.parse().map_err(|_| unknown())?;
        let w: usize = w.parse().map_err(|_| unknown())?;
        return free_leibniz(g, w, &Caps::default()).map(|a| a.with_name(name));
    }
    let algebra = match name {
        // {x,x} = y, the smallest non-Lie Leibniz algebra
        "A2" => LeibnizAlgebra::new(name, names(&["x", "y"]), [entry(0, 0, &[(1, 1)])], None)?,
        "lie-nonabelian2" => LeibnizAlgebra::new(
            name,
            names(&["x", "y"]),
            [entry(0, 1, &[(0, 1)]), entry(1, 0, &[(0, -1)])],
            None,
        )?,
        // {x,y} = x with {y,x} = 0: right multiplications are derivations
        "rsolv2" => LeibnizAlgebra::new(name, names(&["x", "y"]), [entry(0, 1, &[(0, 1)])], None)?,
        // brackets land in the central z
        "nil3" => LeibnizAlgebra::new(
            name,
            names(&["x", "y", "z"]),
            [
                entry(0, 0, &[(2, 1)]),
                entry(0, 1, &[(2, 1)]),
                entry(1, 1, &[(2, -1)]),
            ],
            None,
        )?,
        "sl2" => LeibnizAlgebra::new(
            name,
            names(&["e", "f", "h"]),
            [
                entry(0, 1, &[(2, 1)]),
                entry(1, 0, &[(2, -1)]),
                entry(2, 0, &[(0, 2)]),
                entry(0, 2, &[(0, -2)]),
                entry(2, 1, &[(1, -2)]),
                entry(1, 2, &[(1, 2)]),
            ],
            None,
        )?,
        "heisenberg" => LeibnizAlgebra::new(
            name,
            names(&["x", "y", "z"]),
            [entry(0, 1, &[(2, 1)]), entry(1, 0, &[(2, -1)])],
            None,
        )?,
        "sum4" => builtin("rsolv2")?.direct_sum(&builtin("A2")?, name)?,
        _ => return Err(unknown()),
    };
    algebra.ensure_valid()?;
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_standard_builtin_is_valid() {
        for name in standard_builtins() {
            let a = builtin(name).unwrap();
            assert!(a.validate().is_empty(), "{name}");
            assert!(a.dimension() <= 4, "{name}");
        }
    }

    #[test]
    fn lie_entries_are_antisymmetric() {
        for name in ["lie-nonabelian2", "sl2", "heisenberg", "abelian-3"] {
            assert!(builtin(name).unwrap().is_antisymmetric(), "{name}");
        }
        for name in ["A2", "rsolv2", "nil3", "sum4"] {
            assert!(!builtin(name).unwrap().is_antisymmetric(), "{name}");
        }
    }

    #[test]
    fn abelian_family() {
        let a = builtin("abelian-3").unwrap();
        assert_eq!(a.dimension(), 3);
        assert!(a.is_abelian());
    }

    #[test]
    fn unknown_name_lists_catalog() {
        let err = builtin("so3").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("sl2") && msg.contains("abelian-<d>"), "{msg}");
        assert!(builtin("abelian-0").is_err());
        assert!(builtin("abelian-x").is_err());
    }

    #[test]
    fn free_family_by_name() {
        assert_eq!(builtin("free-2-2").unwrap().dimension(), 6);
    }
}
