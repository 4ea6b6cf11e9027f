//! End-to-end tests driving the `latinsq` binary, including golden-file
//! checks against the shipped data squares.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latinsq"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    for a in args {
        if let Some(name) = a.strip_prefix("data:") {
            cmd.arg(data(name));
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().expect("spawn latinsq")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn rects_census() {
    let out = run(&["--json", "rects", "data:example1.sq"]);
    let v = json_of(&out);
    assert_eq!(v["count"], 8);
    assert_eq!(v["order"], 7);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["rectangles"][4], serde_json::json!([2, 3, 7, 7, 4, 6]));

    let v = json_of(&run(&["--json", "rects", "data:example4.sq"]));
    assert_eq!(v["count"], 7);
}

#[test]
fn rects_oracle_and_cycles() {
    let v = json_of(&run(&["--json", "rects", "--oracle", "--cycles", "data:example1.sq"]));
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(v["oracle_count"], 8);
    let products = v["products"].as_array().unwrap();
    assert!(products
        .iter()
        .any(|p| p["product"] == "(15.24.367.)" && p["rows"] == serde_json::json!([2, 4])));
}

#[test]
fn rects_empty_for_odd_cyclic() {
    let v = json_of(&run(&["--json", "rects", "data:cyclic5.sq"]));
    assert_eq!(v["count"], 0);
}

#[test]
fn transform_golden_round_trip() {
    let out = run(&["transform", "data:example1.sq", "2", "3", "7", "7"]);
    assert!(out.status.success());
    let expected = std::fs::read(data("example2.sq")).unwrap();
    assert_eq!(out.stdout, expected, "transform output must be bit-exact");
    assert!(String::from_utf8_lossy(&out.stderr).contains("distance: 4"));

    // switched rectangle, written with columns exchanged, restores the input
    let back = run(&["transform", "data:example2.sq", "2", "7", "7", "3"]);
    assert_eq!(back.stdout, std::fs::read(data("example1.sq")).unwrap());
}

#[test]
fn transform_rejects_non_rectangle() {
    let out = run(&["transform", "data:example1.sq", "1", "2", "3", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a rectangle"), "stderr: {err}");
}

#[test]
fn autotopisms_report() {
    let v = json_of(&run(&["--json", "autotopisms", "data:example1.sq"]));
    assert_eq!(v["group_order"], 2);
    let triples = v["autotopisms"].as_array().unwrap();
    assert!(triples.iter().any(|t| {
        t["alpha"]["cycles"] == "(15.24.37.6.)" && t["beta"]["cycles"] == "(12.36.47.5.)"
    }));

    let v = json_of(&run(&["--json", "autotopisms", "data:klein.sq"]));
    assert_eq!(v["group_order"], 96);
}

#[test]
fn classes_report() {
    let v = json_of(&run(&["--json", "classes", "data:example1.sq"]));
    assert_eq!(v["class_count"], 4);
    assert_eq!(v["classes"][0][0], serde_json::json!([1, 1, 2, 2, 1, 2]));
    assert_eq!(v["classes"][0][1], serde_json::json!([4, 1, 5, 2, 4, 5]));
}

#[test]
fn isotopic_self_and_anti() {
    let v = json_of(&run(&["--json", "isotopic", "data:example1.sq", "data:example1.sq"]));
    assert_eq!(v["isotopic"], true);
    assert_eq!(v["fast_rejected"], false);
    assert_eq!(v["witness"]["alpha"]["cycles"], "(1.2.3.4.5.6.7.)");

    // a commutative square is antiisotopic to itself via the identity
    let v = json_of(&run(&["--json", "isotopic", "--anti", "data:example4.sq", "data:example4.sq"]));
    assert_eq!(v["isotopic"], true);
}

#[test]
fn isotopic_fast_reject() {
    let v = json_of(&run(&["--json", "isotopic", "data:cyclic4.sq", "data:klein.sq"]));
    assert_eq!(v["isotopic"], false);
    assert_eq!(v["fast_rejected"], true);
    // order mismatch is an input error, not a verdict
    let out = run(&["isotopic", "data:example1.sq", "data:example4.sq"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parastrophe_transpose_of_commutative_square() {
    let out = run(&["parastrophe", "data:example4.sq", "5"]);
    assert_eq!(out.stdout, std::fs::read(data("example4.sq")).unwrap());
    let out = run(&["parastrophe", "data:example1.sq", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn distance_between_fixtures() {
    let v = json_of(&run(&["--json", "distance", "data:example1.sq", "data:example2.sq"]));
    assert_eq!(v["distance"], 4);
}

#[test]
fn gen_matches_shipped_tables() {
    for (args, file) in [
        (vec!["gen", "cyclic", "4"], "cyclic4.sq"),
        (vec!["gen", "cyclic", "5"], "cyclic5.sq"),
        (vec!["gen", "klein"], "klein.sq"),
        (vec!["gen", "boolean", "3"], "boolean8.sq"),
    ] {
        let out = run(&args);
        assert_eq!(
            out.stdout,
            std::fs::read(data(file)).unwrap(),
            "gen output differs from data/{file}"
        );
    }
}

#[test]
fn pipeline_gen_groupcheck() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.sq");
    let out = run(&["gen", "cyclic", "5"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let v = json_of(
        &bin()
            .args(["--json", "groupcheck"])
            .arg(&path)
            .output()
            .unwrap(),
    );
    assert_eq!(v["group"], true);
    assert_eq!(v["involutions"], serde_json::json!([]));
    assert_eq!(v["has_rectangle"], false);
}

#[test]
fn groupcheck_non_group() {
    let v = json_of(&run(&["--json", "groupcheck", "data:example1.sq"]));
    assert_eq!(v["group"], false);
    assert_eq!(v["failure"], "not associative");
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.sq");
    std::fs::write(&path, "3\n1 2 3\n2 2 1\n3 1 2\n").unwrap();
    let out = bin().arg("rects").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("row 2"), "stderr: {err}");

    let out = bin().arg("rects").arg(dir.path().join("missing.sq")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c9.sq");
    let out = run(&["gen", "cyclic", "9"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let out = bin().arg("autotopisms").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["--json", "classes", "data:example1.sq"]);
    let b = run(&["--json", "classes", "data:example1.sq"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--json", "autotopisms", "data:klein.sq"]);
    let b = run(&["--json", "autotopisms", "data:klein.sq"]);
    assert_eq!(a.stdout, b.stdout);
}
