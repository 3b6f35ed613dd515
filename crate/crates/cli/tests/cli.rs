use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adoseries")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn alexander_of_trefoil() {
    let out = run(&["invariant", "alexander", "--knot", "trefoil"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["terms"], serde_json::json!([[-1, "1"], [0, "-1"], [1, "1"]]));
}

#[test]
fn ftable_of_unknot() {
    let out = run(&["invariant", "ftable", "--knot", "unknot", "--D", "4"]);
    let v = json(&out);
    assert_eq!(v["coeffs"], serde_json::json!([[0, 0, "1"]]));
    assert_eq!(v["D"], 4);
}

#[test]
fn jones_color_zero_is_one() {
    let out = run(&["invariant", "jones", "--braid", "1 1 1", "--N", "0"]);
    assert_eq!(json(&out)["terms"], serde_json::json!([[0, "1"]]));
}

#[test]
fn csv_projection_of_ftable() {
    let out = run(&["invariant", "ftable", "--knot", "trefoil", "--D", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("n,m,value"));
    assert!(text.lines().any(|l| l == "0,0,1"));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "lemmas", "--r", "3", "--max-m", "8"][..],
        &["verify", "congruence", "--knot", "figure8", "--r", "3", "--D", "5"],
        &["verify", "vassiliev", "--functional", "b:1,1", "--marks", "3", "--seed", "7", "--samples", "20"],
        &["verify", "factorization", "--knot", "trefoil", "--r", "3", "--D", "4", "--M", "2"],
        &["verify", "valuation", "--knot", "trefoil", "--r", "2", "--M", "4"],
    ] {
        let out = run(args);
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let reports = json(&out);
        assert!(reports.as_array().unwrap().iter().all(|r| r["status"] == "pass"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["invariant", "alexander", "--braid", "1 x"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "alexander", "--knot", "8_19"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "alexander", "--braid", "1 1"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "vassiliev"]).status.code(), Some(2));
    assert_eq!(run(&["invariant", "nonsense"]).status.code(), Some(2));
}

#[test]
fn failing_check_still_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cong.json");
    let out = run(&["verify", "congruence", "--knot", "trefoil", "--r", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["status"], "fail");
}

#[test]
fn fixed_seed_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let path = dir.path().join(format!("v{i}.json"));
            let out = run(&[
                "verify",
                "vassiliev",
                "--functional",
                "lambda:2",
                "--seed",
                "3",
                "--samples",
                "10",
                "--out",
                path.to_str().unwrap(),
            ]);
            assert!(out.status.success());
            std::fs::read(&path).unwrap()
        })
        .collect();
    assert_eq!(files[0], files[1]);
}

#[test]
fn help_documents_flags() {
    let verify = String::from_utf8(run(&["verify", "--help"]).stdout).unwrap();
    for flag in [
        "--knot",
        "--braid",
        "--r",
        "--D",
        "--M",
        "--seed",
        "--samples",
        "--format",
        "--out",
        "--functional",
        "--marks",
        "--max-m",
    ] {
        assert!(verify.contains(flag), "verify --help lacks {flag}");
    }
    let inv = String::from_utf8(run(&["invariant", "--help"]).stdout).unwrap();
    for flag in ["--knot", "--braid", "--N", "--r", "--D", "--format", "--out"] {
        assert!(inv.contains(flag), "invariant --help lacks {flag}");
    }
}
