use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{Map, Value};

use leibhom_core::complexes::HomologyRow;
use leibhom_core::eulerian::{Certification, Conjecture2Verdict, LieLink};

use crate::config::RunConfig;

pub const REPORT_VERSION: &str = concat!("leibhom ", env!("CARGO_PKG_VERSION"));

/// A Leibniz-identity failure with basis names and rational residual entries.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ViolationEntry {
    pub triple: [String; 3],
    pub residual: Vec<(String, String)>,
}

/// A cycle as a sum of basis words, coefficients as rational strings.
pub type Chain = Vec<(String, String)>;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Validation {
        algebra: String,
        dimension: usize,
        valid: bool,
        violations: Vec<ViolationEntry>,
    },
    Homology {
        algebra: String,
        complex: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        weight: Option<usize>,
        #[serde(flatten)]
        row: HomologyRow,
    },
    Cycles {
        algebra: String,
        complex: String,
        degree: usize,
        cycles: Vec<Chain>,
    },
    Liezation {
        algebra: String,
        lie_dimension: usize,
        li1: usize,
        agrees: bool,
    },
    WeightedLi {
        generators: usize,
        max_weight: usize,
        weight: usize,
        degree: usize,
        chain_dim: usize,
        homology_dim: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        verdict: Option<String>,
    },
    WittCheck {
        generators: usize,
        weight: usize,
        li1: usize,
        witt: u64,
        agrees: bool,
    },
    Certification {
        #[serde(flatten)]
        certification: Certification,
    },
    Conjecture2 {
        algebra: String,
        #[serde(flatten)]
        verdict: Conjecture2Verdict,
    },
    LieLink {
        #[serde(flatten)]
        link: LieLink,
    },
    Wigner {
        check: String,
        dim_v: usize,
        degree: usize,
        trials: usize,
        passed: usize,
        failed: usize,
        vacuous: bool,
    },
    Witness {
        check: String,
        degree: usize,
        trial: usize,
        operator: Vec<Vec<String>>,
        omega: Chain,
    },
    Note {
        text: String,
    },
    Timing {
        millis: u128,
    },
}

impl Item {
    pub fn text_line(&self) -> String {
        match self {
            Item::Validation {
                algebra,
                dimension,
                valid,
                violations,
            } => {
                let mut s = format!(
                    "{algebra} (dim {dimension}): {}",
                    if *valid { "valid Leibniz algebra".to_string() } else { format!("{} violation(s)", violations.len()) }
                );
                for v in violations {
                    let residual: Vec<String> = v.residual.iter().map(|(b, c)| format!("{c}·{b}")).collect();
                    s.push_str(&format!(
                        "\n  ({}, {}, {}): residual {}",
                        v.triple[0],
                        v.triple[1],
                        v.triple[2],
                        residual.join(" + ")
                    ));
                }
                s
            }
            Item::Homology {
                algebra,
                complex,
                weight,
                row,
            } => {
                let w = weight.map(|w| format!(" weight {w}")).unwrap_or_default();
                format!(
                    "{complex}_{}({algebra}){w} = {}   [chain {}, rank d {}, ker {}]",
                    row.degree, row.homology_dim, row.chain_dim, row.boundary_rank, row.kernel_dim
                )
            }
            Item::Cycles {
                algebra,
                complex,
                degree,
                cycles,
            } => {
                let mut s = format!("{complex} cycles of {algebra} in degree {degree}:");
                for c in cycles {
                    let terms: Vec<String> = c.iter().map(|(w, x)| format!("{x}·{w}")).collect();
                    s.push_str(&format!("\n  {}", terms.join(" + ")));
                }
                s
            }
            Item::Liezation {
                algebra,
                lie_dimension,
                li1,
                agrees,
            } => format!(
                "dim Li_1({algebra}) = {li1}, dim {algebra}_Lie = {lie_dimension}: {}",
                if *agrees { "agree" } else { "MISMATCH" }
            ),
            Item::WeightedLi {
                generators,
                weight,
                degree,
                chain_dim,
                homology_dim,
                verdict,
                ..
            } => {
                let v = verdict.as_ref().map(|v| format!("  VERDICT {v}")).unwrap_or_default();
                format!(
                    "free g={generators}: Li_{degree} weight {weight} = {homology_dim}   [chain {chain_dim}]{v}"
                )
            }
            Item::WittCheck {
                generators,
                weight,
                li1,
                witt,
                agrees,
            } => format!(
                "free g={generators}: Li_1 weight {weight} = {li1}, Witt number {witt}: {}",
                if *agrees { "agree" } else { "MISMATCH" }
            ),
            Item::Certification { certification: c } => format!(
                "Eulerian idempotents n={}: complete {}, orthogonal {}",
                c.degree, c.complete, c.orthogonal
            ),
            Item::Conjecture2 { algebra, verdict: v } => format!(
                "{algebra} n={} i={} {}: d(Im e^({})) dim {} in sum of {} of dim {}: {}",
                v.degree,
                v.i,
                v.convention.name(),
                v.i,
                v.boundary_rank,
                v.i.min(v.degree - 1),
                v.target_dim,
                if v.contained { "contained" } else { "NOT contained" }
            ),
            Item::LieLink { link } => format!(
                "dim V={} n={}: rank Im e^(1) signed = {}, dim L(V,1)_n = {}, equal: {}",
                link.dim_v, link.degree, link.idempotent_rank, link.lie_dim, link.equal
            ),
            Item::Wigner {
                check,
                dim_v,
                degree,
                trials,
                passed,
                failed,
                vacuous,
            } => {
                if *vacuous {
                    format!("{check} d={dim_v} n={degree}: vacuous (empty Lie basis)")
                } else {
                    format!("{check} d={dim_v} n={degree}: {passed}/{trials} passed, {failed} failed")
                }
            }
            Item::Witness {
                check,
                degree,
                trial,
                operator,
                omega,
            } => format!("{check} FAILED at n={degree} trial {trial}: D = {operator:?}, ω = {omega:?}"),
            Item::Note { text } => text.clone(),
            Item::Timing { millis } => format!("elapsed {millis} ms"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub results: Vec<Item>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Report {
            version: REPORT_VERSION.to_string(),
            config,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, item: Item) {
        self.results.push(item);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for item in &self.results {
            s.push_str(&item.text_line());
            s.push('\n');
        }
        s
    }

    /// One result per row; nested values are written as compact JSON.
    pub fn to_csv(&self) -> String {
        let rows: Vec<Map<String, Value>> = self
            .results
            .iter()
            .map(|item| match serde_json::to_value(item).expect("items serialize") {
                Value::Object(m) => m,
                other => unreachable!("items serialize to objects, got {other}"),
            })
            .collect();
        let mut columns: BTreeSet<String> = rows.iter().flat_map(|r| r.keys().cloned()).collect();
        columns.remove("kind");
        let header: Vec<String> = std::iter::once("kind".to_string()).chain(columns).collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header).expect("in-memory csv");
        for row in &rows {
            let record = header.iter().map(|k| match row.get(k) {
                None | Some(Value::Null) => String::new(),
                Some(Value::String(s)) => s.clone(),
                Some(v) => v.to_string(),
            });
            w.write_record(record).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::CommandName;

    fn sample() -> Report {
        let mut r = Report::new(RunConfig::new(CommandName::Hl, Some("A2")));
        r.push(Item::Homology {
            algebra: "A2".into(),
            complex: "HL".into(),
            weight: None,
            row: HomologyRow {
                degree: 1,
                chain_dim: 2,
                boundary_rank: 0,
                kernel_dim: 2,
                homology_dim: 1,
            },
        });
        r.push(Item::Note { text: "tested range only".into() });
        r
    }

    #[test]
    fn json_has_versioned_envelope() {
        let v: Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert!(v["version"].as_str().unwrap().starts_with("leibhom "));
        assert_eq!(v["config"]["command"], "hl");
        assert_eq!(v["results"][0]["kind"], "homology");
        assert_eq!(v["results"][0]["homology_dim"], 1);
    }

    #[test]
    fn csv_one_row_per_result() {
        let csv = sample().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("kind,"));
        assert!(lines[1].starts_with("homology,"));
    }

    #[test]
    fn text_lines() {
        let text = sample().to_text();
        assert!(text.starts_with("HL_1(A2) = 1"));
    }
}
