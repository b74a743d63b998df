//! Black-box tests of the command-line binary: output schemas, exit codes,
//! and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewlines"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table1", "--format", "json"],
        vec!["roots"],
        vec!["orbits", "--config", "3A2"],
        vec!["double-sixes", "--format", "json"],
    ] {
        let a = stdout(&args);
        let b = stdout(&args);
        assert_eq!(a, b, "two runs of {args:?} differ");
        assert!(!a.is_empty());
    }
}

#[test]
fn table1_json_schema() {
    let text = stdout(&["table1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 21);
    let three_a2 = rows
        .iter()
        .find(|r| r["config"] == "3A2")
        .expect("3A2 row present");
    assert_eq!(three_a2["count"], 5);
    assert_eq!(three_a2["type"], "XXI");
}

#[test]
fn six_ways_json() {
    let text = stdout(&[
        "six-ways",
        "--root",
        "2,-1,-1,-1,-1,-1,-1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], 6);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 6);
}

#[test]
fn inventories() {
    for (args, key, expected) in [
        (["roots", "--format", "json"], "count", 72),
        (["lines", "--format", "json"], "count", 27),
        (["tritangents", "--format", "json"], "count", 45),
        (["double-sixes", "--format", "json"], "count", 36),
    ] {
        let v: serde_json::Value = serde_json::from_str(&stdout(&args)).unwrap();
        assert_eq!(v[key], expected, "{args:?}");
    }
}

#[test]
fn classify_line_on_fixtures() {
    let text = stdout(&[
        "classify-line",
        "--surface",
        &fixture("three_a2.json"),
        "--line",
        &fixture("coord_line.json"),
    ]);
    assert_eq!(text.trim(), "kind: second");
    let text = stdout(&[
        "classify-line",
        "--surface",
        &fixture("a4_a1.json"),
        "--line",
        &fixture("coord_line.json"),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "first");
}

#[test]
fn singularity_and_cone_verbs() {
    let text = stdout(&[
        "singularity",
        "--surface",
        &fixture("a4_a1.json"),
        "--point",
        "1,0,0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["ade"], "A4");
    assert_eq!(v["milnor_number"], 4);
    let text = stdout(&[
        "cone",
        "--surface",
        &fixture("three_a2.json"),
        "--point",
        "1,0,0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["kind"], "not_cone");
}

#[test]
fn eckardt_verb() {
    let text = stdout(&[
        "eckardt",
        "--surface",
        &fixture("fermat_threefold.json"),
        "--point",
        "1,-1,0,0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["eckardt"], true);
}

#[test]
fn conjugate_verb() {
    // second-type line of the 3A2 surface: the dual map degenerates
    let out = run(&[
        "conjugate",
        "--surface",
        &fixture("three_a2.json"),
        "--line",
        &fixture("coord_line.json"),
        "--point",
        "1,1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // first-type line of the A4+A1 surface: generic points are their own
    // conjugate
    let text = stdout(&[
        "conjugate",
        "--surface",
        &fixture("a4_a1.json"),
        "--line",
        &fixture("coord_line.json"),
        "--point",
        "1,1,0,0",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["point"], serde_json::json!(["1", "1", "0", "0"]));
}

#[test]
fn skew_count_verb() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "skew-count",
        "--config",
        "A1",
        "--line-types",
        "first:all",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["I"], 120);
    assert_eq!(v["II"], 6);
    assert_eq!(v["III"], 15);
    assert_eq!(v["IV"], 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "skew-count",
        "--config",
        "3A2",
        "--line-types",
        "0:second,1:second,2:second",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["III"], 3);
    assert_eq!(v["IV"], 6);
}

#[test]
fn hilbert_poly_verb() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "hilbert-poly",
        "--format",
        "json",
    ]))
    .unwrap();
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 4);
    for ideal in ideals {
        for entry in ideal["values"].as_array().unwrap() {
            let n = entry["degree"].as_u64().unwrap();
            assert_eq!(entry["value"].as_u64().unwrap(), 2 * n + 2);
        }
    }
}

#[test]
fn input_errors_exit_2() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["orbits", "--config", "A7"],
        vec!["six-ways", "--root", "1,2,3"],
        vec!["six-ways", "--root", "3,-1,-1,-1,-1,-1,-1"], // h is not a root
        vec!["classify-line", "--surface", "/nonexistent.json", "--line", "/nonexistent.json"],
        vec!["quadric", "--a", "0", "--b", "0"],
        vec!["skew-count", "--config", "A1", "--line-types", "0:first"], // incomplete
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(err.trim().lines().count(), 1, "one-line diagnostic for {args:?}");
    }
    // unknown verbs are rejected by the parser
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_embeddings_flag() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "orbits",
        "--config",
        "4A1",
        "--all-embeddings",
        "--format",
        "json",
    ]))
    .unwrap();
    let classes = v["classes"].as_array().unwrap();
    assert!(!classes.is_empty());
    assert!(classes.iter().any(|c| c["geometric"] == true));
}
