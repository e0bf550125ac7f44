use std::process::Command;

use leibhom_cli::{error_exit_code, run, CommandName, Format, Item, Output, RunConfig};

fn config(command: CommandName, input: Option<&str>) -> RunConfig {
    RunConfig::new(command, input)
}

fn results(c: &RunConfig) -> (Vec<Item>, bool) {
    let outcome = run(c).unwrap();
    match outcome.output {
        Output::Report(r) => (r.results, outcome.failed),
        Output::Raw(_) => panic!("expected a report"),
    }
}

fn homology_dims(items: &[Item]) -> Vec<usize> {
    items
        .iter()
        .filter_map(|i| match i {
            Item::Homology { row, .. } => Some(row.homology_dim),
            _ => None,
        })
        .collect()
}

fn leibhom(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_leibhom")).args(args).output().unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("leibhom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn hl_of_abelian_plane() {
    let (items, failed) = results(&config(CommandName::Hl, Some("abelian-2")));
    assert!(!failed);
    assert_eq!(homology_dims(&items), [1, 2, 4, 8]);
}

#[test]
fn li_of_a2_and_sl2() {
    let mut c = config(CommandName::Li, Some("A2"));
    let (items, failed) = results(&c);
    assert!(!failed);
    assert_eq!(homology_dims(&items)[0], 1);
    assert!(items.iter().any(|i| matches!(i, Item::Liezation { li1: 1, agrees: true, .. })));

    c.input = Some("sl2".into());
    c.degree = 2;
    let (items, _) = results(&c);
    assert_eq!(homology_dims(&items)[0], 3);
}

#[test]
fn representatives_are_listed_per_degree() {
    let mut c = config(CommandName::Hl, Some("A2"));
    c.degree = 2;
    c.representatives = true;
    let (items, _) = results(&c);
    let cycles: Vec<usize> = items
        .iter()
        .filter_map(|i| match i {
            Item::Cycles { cycles, .. } => Some(cycles.len()),
            _ => None,
        })
        .collect();
    assert_eq!(cycles.len(), 3);
}

#[test]
fn conjecture1_li_one_matches_witt() {
    for (g, expected) in [(1, [1, 0, 0, 0]), (2, [2, 1, 2, 3])] {
        let mut c = config(CommandName::Conjecture1, None);
        c.generators = g;
        c.weight = 4;
        let (items, failed) = results(&c);
        assert!(!failed);
        let li1: Vec<usize> = items
            .iter()
            .filter_map(|i| match i {
                Item::WittCheck { li1, agrees: true, .. } => Some(*li1),
                _ => None,
            })
            .collect();
        assert_eq!(li1, expected);
    }
}

#[test]
fn conjecture1_small_verdict() {
    let mut c = config(CommandName::Conjecture1, None);
    c.generators = 1;
    c.weight = 2;
    c.degree = 2;
    let (items, _) = results(&c);
    let verdict = items.iter().find_map(|i| match i {
        Item::WeightedLi { degree: 2, weight: 2, verdict, .. } => verdict.clone(),
        _ => None,
    });
    assert_eq!(verdict.as_deref(), Some("vanishes (tested range only)"));
}

#[test]
fn conjecture2_abelian_all_contained() {
    let mut c = config(CommandName::Conjecture2, Some("abelian-2"));
    c.degree = 4;
    let (items, failed) = results(&c);
    assert!(!failed);
    let verdicts: Vec<bool> = items
        .iter()
        .filter_map(|i| match i {
            Item::Conjecture2 { verdict, .. } => Some(verdict.contained),
            _ => None,
        })
        .collect();
    // (2 + 3 + 4) values of i, two conventions
    assert_eq!(verdicts.len(), 18);
    assert!(verdicts.iter().all(|&v| v));
}

#[test]
fn corrupt_idempotent_aborts_before_verdicts() {
    let mut c = config(CommandName::Conjecture2, Some("A2"));
    c.corrupt_idempotent = true;
    let (items, failed) = results(&c);
    assert!(failed);
    assert!(!items.iter().any(|i| matches!(i, Item::Conjecture2 { .. })));
}

#[test]
fn wigner_grid() {
    let mut c = config(CommandName::Wigner, None);
    c.dim = 2;
    c.degree = 4;
    let (items, failed) = results(&c);
    assert!(!failed);
    assert!(!items.iter().any(|i| matches!(i, Item::Witness { .. })));

    c.trials = 0;
    assert!(results(&c).0.is_empty());

    c.trials = 3;
    c.dim = 1;
    c.degree = 3;
    let (items, _) = results(&c);
    assert!(items.iter().any(|i| matches!(
        i,
        Item::Wigner { check, degree: 3, vacuous: true, .. } if check == "friedrichs"
    )));
}

#[test]
fn export_then_validate_round_trip() {
    let outcome = run(&config(CommandName::Export, Some("A2"))).unwrap();
    let path = temp_file("a2.json", &outcome.render(Format::Text));
    let (items, failed) = results(&config(CommandName::Validate, path.to_str()));
    assert!(!failed);
    assert!(matches!(&items[0], Item::Validation { valid: true, .. }));
}

#[test]
fn violation_is_reported() {
    let text = r#"{"name": "bad", "dimension": 1, "basis": ["x"],
        "brackets": [{"left": "x", "right": "x", "value": {"x": "1"}}]}"#;
    let path = temp_file("bad.json", text);
    let (items, failed) = results(&config(CommandName::Validate, path.to_str()));
    assert!(failed);
    match &items[0] {
        Item::Validation { violations, .. } => {
            assert!(violations.iter().any(|v| v.triple == ["x", "x", "x"].map(String::from)));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn error_codes() {
    let e = run(&config(CommandName::Hl, Some("no-such-algebra"))).err().unwrap();
    assert_eq!(error_exit_code(&e), 2);
    let mut c = config(CommandName::Hl, Some("abelian-3"));
    c.cap = 10;
    let e = run(&c).err().unwrap();
    assert_eq!(error_exit_code(&e), 3);
}

#[test]
fn binary_exit_statuses() {
    assert_eq!(leibhom(&["hl", "abelian-2"]).status.code(), Some(0));
    assert_eq!(leibhom(&["hl", "nope"]).status.code(), Some(2));
    assert_eq!(leibhom(&["hl", "abelian-3", "--cap", "10"]).status.code(), Some(3));
    let bad = r#"{"name": "bad", "dimension": 1, "basis": ["x"],
        "brackets": [{"left": "x", "right": "x", "value": {"x": "1/0"}}]}"#;
    let path = temp_file("zero.json", bad);
    let out = leibhom(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("brackets[0].value.x"));
}

#[test]
fn binary_json_is_reproducible() {
    let args = ["conjecture2", "A2", "--degree", "3", "--format", "json"];
    let a = leibhom(&args);
    let b = leibhom(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["config"]["command"], "conjecture2");
    assert!(v["results"].is_array());
}

#[test]
fn binary_csv_and_out_path() {
    let path = std::env::temp_dir().join(format!("leibhom-out-{}.csv", std::process::id()));
    let out = leibhom(&["li", "A2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("kind,"));
    assert!(csv.lines().any(|l| l.starts_with("liezation,")));
}
