use std::path::Path;
use std::time::Instant;

use leibhom_core::complexes::{cl_complex, li_complex, weight_graded_li, ChainComplexData};
use leibhom_core::eulerian::{
    conjecture2_with, lie_link, EulerianFamily, GroupAlgebraElement, Permutation,
};
use leibhom_core::hopf::{friedrichs_check, wigner_check};
use leibhom_core::leibniz::{builtin, file, free_leibniz, LeibnizAlgebra};
use leibhom_core::linalg::{format_rational, int, RationalMatrix, Scalar};
use leibhom_core::sample::Sampler;
use leibhom_core::tensor::{lie_basis, TensorElement};
use leibhom_core::witt::witt_number;
use leibhom_core::{Error, Result};

use crate::config::{CommandName, RunConfig};
use crate::report::{Chain, Item, Report, ViolationEntry};

pub const TESTED_RANGE: &str = "verdicts cover the tested range only; nothing here is a proof";

pub enum Output {
    Report(Report),
    /// Verbatim text, used by `export`.
    Raw(String),
}

pub struct Outcome {
    pub output: Output,
    /// A mathematical check failed (exit status 1).
    pub failed: bool,
}

impl Outcome {
    fn report(report: Report, failed: bool) -> Self {
        Outcome {
            output: Output::Report(report),
            failed,
        }
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed)
    }
}

/// Exit status for an error that stopped a run.
pub fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Certification(_) | Error::Internal(_) => 1,
        _ => 2,
    }
}

/// A file path if one exists, otherwise a catalog name.
pub fn load_algebra(input: Option<&str>) -> Result<LeibnizAlgebra> {
    let input = input.ok_or_else(|| Error::InvalidArgument("this command needs an INPUT algebra".into()))?;
    let path = Path::new(input);
    if path.is_file() {
        file::load(path)
    } else {
        builtin(input)
    }
}

fn check_bounds(c: &RunConfig) -> Result<()> {
    for (name, value) in [
        ("--degree", c.degree),
        ("--weight", c.weight),
        ("--generators", c.generators),
        ("--cap", c.cap),
        ("--dim", c.dim),
    ] {
        if value == 0 {
            return Err(Error::InvalidArgument(format!("{name} must be positive")));
        }
    }
    Ok(())
}

pub fn run(config: &RunConfig) -> Result<Outcome> {
    check_bounds(config)?;
    let start = Instant::now();
    let mut outcome = match config.command {
        CommandName::Validate => cmd_validate(config),
        CommandName::Hl => cmd_hl(config),
        CommandName::Li => cmd_li(config),
        CommandName::Conjecture1 => cmd_conjecture1(config),
        CommandName::Conjecture2 => cmd_conjecture2(config),
        CommandName::Wigner => cmd_wigner(config),
        CommandName::Export => cmd_export(config),
    }?;
    if config.timing {
        if let Output::Report(r) = &mut outcome.output {
            r.push(Item::Timing {
                millis: start.elapsed().as_millis(),
            });
        }
    }
    Ok(outcome)
}

fn chain(names: &[String], t: &TensorElement) -> Chain {
    t.terms()
        .map(|(w, c)| {
            let word: Vec<&str> = w.iter().map(|&l| names[l].as_str()).collect();
            (word.join("⊗"), format_rational(c))
        })
        .collect()
}

pub fn cmd_validate(c: &RunConfig) -> Result<Outcome> {
    let a = load_algebra(c.input.as_deref())?;
    let names = a.basis_names();
    let violations: Vec<ViolationEntry> = a
        .validate()
        .into_iter()
        .map(|v| {
            let (i, j, k) = v.triple;
            ViolationEntry {
                triple: [names[i].clone(), names[j].clone(), names[k].clone()],
                residual: v
                    .residual
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != int(0))
                    .map(|(l, x)| (names[l].clone(), format_rational(x)))
                    .collect(),
            }
        })
        .collect();
    let valid = violations.is_empty();
    let mut r = Report::new(c.clone());
    r.push(Item::Validation {
        algebra: a.name().to_string(),
        dimension: a.dimension(),
        valid,
        violations,
    });
    Ok(Outcome::report(r, !valid))
}

fn push_homology(
    r: &mut Report,
    c: &RunConfig,
    a: &LeibnizAlgebra,
    complex: &str,
    data: &ChainComplexData,
    include: impl Fn(usize, &[Scalar]) -> Result<TensorElement>,
) -> Result<()> {
    let homology = data.homology(None);
    for row in &homology.rows {
        r.push(Item::Homology {
            algebra: a.name().to_string(),
            complex: complex.to_string(),
            weight: None,
            row: row.clone(),
        });
    }
    if c.representatives {
        for row in &homology.rows {
            let cycles = data
                .cycles(row.degree)
                .ok_or_else(|| Error::Internal(format!("missing degree {}", row.degree)))?;
            let cycles = cycles
                .columns()
                .iter()
                .map(|v| Ok(chain(a.basis_names(), &include(row.degree, v)?)))
                .collect::<Result<Vec<_>>>()?;
            r.push(Item::Cycles {
                algebra: a.name().to_string(),
                complex: complex.to_string(),
                degree: row.degree,
                cycles,
            });
        }
    }
    Ok(())
}

pub fn cmd_hl(c: &RunConfig) -> Result<Outcome> {
    let a = load_algebra(c.input.as_deref())?;
    a.ensure_valid()?;
    let data = cl_complex(&a, c.degree + 1, &c.caps())?;
    let dim = a.dimension();
    let mut r = Report::new(c.clone());
    push_homology(&mut r, c, &a, "HL", &data, |n, v| {
        Ok(TensorElement::from_dense(n, dim, v))
    })?;
    Ok(Outcome::report(r, false))
}

pub fn cmd_li(c: &RunConfig) -> Result<Outcome> {
    let a = load_algebra(c.input.as_deref())?;
    a.ensure_valid()?;
    let caps = c.caps();
    let data = li_complex(&a, c.degree + 1, &caps)?;
    let dim = a.dimension();
    let mut r = Report::new(c.clone());
    push_homology(&mut r, c, &a, "Li", &data, |n, v| lie_basis(dim, n, &caps)?.include(v))?;
    let li1 = data.homology(None).row(1).map_or(0, |row| row.homology_dim);
    let lie_dimension = a.liezation()?.algebra.dimension();
    let agrees = li1 == lie_dimension;
    r.push(Item::Liezation {
        algebra: a.name().to_string(),
        lie_dimension,
        li1,
        agrees,
    });
    Ok(Outcome::report(r, !agrees))
}

pub fn cmd_conjecture1(c: &RunConfig) -> Result<Outcome> {
    let caps = c.caps();
    let (g, top) = (c.generators, c.weight);
    let free = free_leibniz(g, top, &caps)?;
    let mut r = Report::new(c.clone());
    let mut failed = false;
    for w in 1..=top {
        let report = weight_graded_li(&free, c.degree, w, &caps)?;
        for row in &report.rows {
            let verdict = (row.degree > 1).then(|| {
                if row.homology_dim == 0 {
                    "vanishes (tested range only)".to_string()
                } else {
                    "NONZERO (counterexample candidate)".to_string()
                }
            });
            r.push(Item::WeightedLi {
                generators: g,
                max_weight: top,
                weight: w,
                degree: row.degree,
                chain_dim: row.chain_dim,
                homology_dim: row.homology_dim,
                verdict,
            });
        }
        let li1 = report.row(1).map_or(0, |row| row.homology_dim);
        let witt = witt_number(g as u64, w as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("Witt number for g = {g}, w = {w} overflows")))?;
        let agrees = li1 as u64 == witt;
        failed |= !agrees;
        r.push(Item::WittCheck {
            generators: g,
            weight: w,
            li1,
            witt,
            agrees,
        });
    }
    r.push(Item::Note {
        text: TESTED_RANGE.to_string(),
    });
    Ok(Outcome::report(r, failed))
}

/// `e^{(1)}` with one coefficient shifted, so completeness fails.
fn corrupt_family(n: usize) -> Result<EulerianFamily> {
    let mut members: Vec<GroupAlgebraElement> = EulerianFamily::new(n)?.members().cloned().collect();
    members[0].add_term(Permutation::identity(n), int(1));
    EulerianFamily::from_members(n, members)
}

pub fn cmd_conjecture2(c: &RunConfig) -> Result<Outcome> {
    let a = load_algebra(c.input.as_deref())?;
    a.ensure_valid()?;
    let caps = c.caps();
    let family = |n: usize| {
        if c.corrupt_idempotent {
            corrupt_family(n)
        } else {
            EulerianFamily::new(n)
        }
    };
    let families = (1..=c.degree).map(family).collect::<Result<Vec<_>>>()?;
    let mut r = Report::new(c.clone());
    let mut certified = true;
    for f in &families {
        let certification = f.certify();
        certified &= certification.passed();
        r.push(Item::Certification { certification });
    }
    if !certified {
        r.push(Item::Note {
            text: "Eulerian certification failed; no verdicts computed".into(),
        });
        return Ok(Outcome::report(r, true));
    }
    for n in 2..=c.degree {
        for convention in c.action.conventions() {
            for verdict in conjecture2_with(&a, &families[n - 1], &families[n - 2], convention, &caps)? {
                r.push(Item::Conjecture2 {
                    algebra: a.name().to_string(),
                    verdict,
                });
            }
        }
    }
    for n in 1..=c.degree {
        r.push(Item::LieLink {
            link: lie_link(a.dimension(), n, &caps)?,
        });
    }
    r.push(Item::Note {
        text: TESTED_RANGE.to_string(),
    });
    Ok(Outcome::report(r, false))
}

fn matrix_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect()
}

pub fn cmd_wigner(c: &RunConfig) -> Result<Outcome> {
    let caps = c.caps();
    let d = c.dim;
    let names: Vec<String> = (0..d).map(|i| format!("v{i}")).collect();
    let mut sampler = Sampler::new(c.seed);
    let mut r = Report::new(c.clone());
    if c.trials == 0 {
        return Ok(Outcome::report(r, false));
    }
    let mut failed = false;
    for n in 1..=c.degree {
        caps.check_power(&format!("V^(⊗{n}) with dim V = {d}"), d, n)?;
        let basis = lie_basis(d, n, &caps)?;
        let vacuous = basis.dim() == 0;
        let (mut w_pass, mut f_pass) = (0, 0);
        let mut witnesses = Vec::new();
        for trial in 0..c.trials {
            let op = sampler.matrix(d, d);
            let omega = sampler.tensor(d, n);
            if wigner_check(&op, &omega)? {
                w_pass += 1;
            } else {
                witnesses.push(("wigner", trial, op.clone(), omega));
            }
            if vacuous {
                continue;
            }
            let coords = sampler.vector(basis.dim());
            if friedrichs_check(&op, &basis, &coords)? {
                f_pass += 1;
            } else {
                witnesses.push(("friedrichs", trial, op, basis.include(&coords)?));
            }
        }
        let f_trials = if vacuous { 0 } else { c.trials };
        failed |= w_pass < c.trials || f_pass < f_trials;
        for (check, passed, trials, vac) in [
            ("wigner", w_pass, c.trials, false),
            ("friedrichs", f_pass, f_trials, vacuous),
        ] {
            r.push(Item::Wigner {
                check: check.to_string(),
                dim_v: d,
                degree: n,
                trials,
                passed,
                failed: trials - passed,
                vacuous: vac,
            });
        }
        for (check, trial, op, omega) in witnesses {
            r.push(Item::Witness {
                check: check.to_string(),
                degree: n,
                trial,
                operator: matrix_strings(&op),
                omega: chain(&names, &omega),
            });
        }
    }
    Ok(Outcome::report(r, failed))
}

pub fn cmd_export(c: &RunConfig) -> Result<Outcome> {
    let a = load_algebra(c.input.as_deref())?;
    Ok(Outcome {
        output: Output::Raw(file::to_json(&a)),
        failed: false,
    })
}
