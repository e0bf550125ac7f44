//! JSON algebra files.
//!
//! ```json
//! {"name": "A2", "dimension": 2, "basis": ["x", "y"],
//!  "brackets": [{"left": "x", "right": "x", "value": {"y": "1"}}]}
//! ```
//!
//! Unlisted brackets are zero; `weights` is optional; unknown keys are
//! rejected. Loading does not run the Leibniz check so that callers can
//! report violations themselves.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, SparseVec};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dimension: usize,
    basis: Vec<String>,
    brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<u32>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    left: String,
    right: String,
    value: BTreeMap<String, String>,
}

fn field_error(field: String, message: impl Into<String>) -> Error {
    Error::Parse {
        field,
        message: message.into(),
    }
}

/// Parses an algebra from JSON text.
pub fn parse(text: &str) -> Result<LeibnizAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| {
        field_error(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    if file.dimension != file.basis.len() {
        return Err(field_error(
            "dimension".into(),
            format!(
                "dimension {} but {} basis names",
                file.dimension,
                file.basis.len()
            ),
        ));
    }
    let index: BTreeMap<&str, usize> = file
        .basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.as_str(), i))
        .collect();
    if index.len() != file.basis.len() {
        return Err(field_error("basis".into(), "basis names must be unique"));
    }
    let lookup = |field: String, name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| field_error(field, format!("unknown basis name {name:?}")))
    };
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for (n, entry) in file.brackets.iter().enumerate() {
        let i = lookup(format!("brackets[{n}].left"), &entry.left)?;
        let j = lookup(format!("brackets[{n}].right"), &entry.right)?;
        let mut value = SparseVec::new();
        for (k, c) in &entry.value {
            let field = format!("brackets[{n}].value.{k}");
            let k = lookup(field.clone(), k)?;
            let c = parse_rational(c).map_err(|m| field_error(field, m))?;
            value.insert(k, c);
        }
        brackets.push(((i, j), value));
    }
    LeibnizAlgebra::new(file.name, file.basis, brackets, file.weights)
}

pub fn load(path: &Path) -> Result<LeibnizAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
    })?;
    parse(&text)
}

/// Serializes an algebra in the file format, listing nonzero brackets only.
pub fn to_json(a: &LeibnizAlgebra) -> String {
    let basis = a.basis_names();
    let file = AlgebraFile {
        name: a.name().to_string(),
        dimension: a.dimension(),
        basis: basis.to_vec(),
        brackets: a
            .nonzero_brackets()
            .map(|((i, j), v)| BracketEntry {
                left: basis[i].clone(),
                right: basis[j].clone(),
                value: v
                    .iter()
                    .map(|(&k, c)| (basis[k].clone(), format_rational(c)))
                    .collect(),
            })
            .collect(),
        weights: a.weights().map(<[u32]>::to_vec),
    };
    serde_json::to_string_pretty(&file).expect("algebra files always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::builtin;

    #[test]
    fn round_trip_builtins() {
        for name in ["A2", "sl2", "sum4", "free-2-2"] {
            let a = builtin(name).unwrap();
            let back = parse(&to_json(&a)).unwrap();
            assert_eq!(back, a, "{name}");
        }
    }

    #[test]
    fn reports_violation_after_load() {
        let text = r#"{"name":"bad","dimension":1,"basis":["x"],
            "brackets":[{"left":"x","right":"x","value":{"x":"1"}}]}"#;
        let a = parse(text).unwrap();
        assert_eq!(a.validate()[0].triple, (0, 0, 0));
    }

    #[test]
    fn zero_denominator_names_field() {
        let text = r#"{"name":"bad","dimension":2,"basis":["x","y"],
            "brackets":[{"left":"x","right":"x","value":{"y":"1/0"}}]}"#;
        match parse(text) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "brackets[0].value.y"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let unknown_key = r#"{"name":"a","dimension":1,"basis":["x"],"brackets":[],"extra":1}"#;
        assert!(parse(unknown_key).is_err());
        let unknown_name = r#"{"name":"a","dimension":1,"basis":["x"],
            "brackets":[{"left":"x","right":"q","value":{}}]}"#;
        match parse(unknown_name) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "brackets[0].right"),
            other => panic!("{other:?}"),
        }
        let wrong_dim = r#"{"name":"a","dimension":2,"basis":["x"],"brackets":[]}"#;
        assert!(parse(wrong_dim).is_err());
        assert!(parse("{").is_err());
    }
}
