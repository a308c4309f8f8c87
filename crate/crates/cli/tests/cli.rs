use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

/// An acyclic orientation of `K_4`.
const EXAMPLE: &str = r#"{"n": 6, "circuits": [
    {"pos": [1, 4], "neg": [2]},
    {"pos": [1, 5], "neg": [3]},
    {"pos": [2, 6], "neg": [3]},
    {"pos": [4, 6], "neg": [5]},
    {"pos": [1, 5], "neg": [2, 6]},
    {"pos": [1, 4, 6], "neg": [3]},
    {"pos": [2, 5], "neg": [3, 4]}
]}"#;

fn posberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posberg"))
        .args(args)
        .output()
        .unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = file(&dir, "good.json", EXAMPLE);
    assert_eq!(
        posberg(&["validate", "--strong", arg(&good)]).status.code(),
        Some(0)
    );

    // drop the four-cycles: elimination on two triangles has no witness
    let broken = r#"{"n": 6, "circuits": [
        {"pos": [1, 4], "neg": [2]}, {"pos": [1, 5], "neg": [3]},
        {"pos": [2, 6], "neg": [3]}, {"pos": [4, 6], "neg": [5]}]}"#;
    let bad = file(&dir, "bad.json", broken);
    let out = posberg(&["validate", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["passed"], Value::Bool(false));

    let empty = file(&dir, "empty.json", "");
    assert_eq!(posberg(&["validate", arg(&empty)]).status.code(), Some(2));
    assert_eq!(
        posberg(&["validate", "/nonexistent/circuits.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn weights_and_flags_give_identical_output() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.json", EXAMPLE);
    let by_weight = posberg(&["mw", arg(&m), "--w", r#"{"w": [1, 1, 1, 1, 1, 0]}"#]);
    let by_flag = posberg(&["mw", arg(&m), "--flag", r#"{"chain": [[6]]}"#]);
    assert_eq!(by_weight.status.code(), Some(0));
    assert_eq!(by_weight.stdout, by_flag.stdout);
    assert_eq!(json(&by_weight)["circuits"].as_array().unwrap().len(), 6);
}

#[test]
fn constant_weights_change_nothing() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.json", EXAMPLE);
    let out = posberg(&[
        "mw",
        arg(&m),
        "--w",
        r#"{"w": ["1/2", "1/2", "1/2", "1/2", "1/2", "1/2"]}"#,
    ]);
    let canon = posberg(&["mw", arg(&m), "--flag", r#"{"chain": []}"#]);
    assert_eq!(out.stdout, canon.stdout);
    assert_eq!(json(&out)["circuits"].as_array().unwrap().len(), 7);
}

#[test]
fn weight_length_must_match() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.json", EXAMPLE);
    assert_eq!(
        posberg(&["mw", arg(&m), "--w", r#"{"w": [1, 2]}"#])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bergman_summaries() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.json", EXAMPLE);
    let positive = json(&posberg(&["bergman", arg(&k4), "--positive", "--coarse"]));
    assert_eq!(positive["f_vector"], serde_json::json!([6, 6]));
    assert_eq!(positive["euler_char"], 0);
    assert_eq!(positive["coarse_full_dimensional"], 5);

    let whole = json(&posberg(&["bergman", arg(&k4)]));
    assert_eq!(whole["f_vector"], serde_json::json!([13, 18]));
    assert_eq!(whole["euler_char"], -5);
}

#[test]
fn output_flag_writes_a_file() {
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.json", EXAMPLE);
    let target = dir.path().join("out.json");
    let out = posberg(&["bergman", arg(&m), "--positive", "-o", arg(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(written["positive"], true);
}

#[test]
fn matrix_readings() {
    let dir = TempDir::new().unwrap();
    // one linear form: x1 + x2 - x3
    let a = file(&dir, "a.json", r#"{"n": 3, "rows": [[1, 1, -1]]}"#);
    let forms = json(&posberg(&["from-matrix", arg(&a)]));
    assert_eq!(forms["circuits"].as_array().unwrap().len(), 1);
    let deps = json(&posberg(&["from-matrix", arg(&a), "--dependencies"]));
    assert_eq!(deps["circuits"].as_array().unwrap().len(), 3);

    // the leading terms of x1 + x2 must not all share a sign
    let out = posberg(&["member", arg(&a), "--w", r#"{"w": [1, 1, 0]}"#]);
    assert_eq!(json(&out)["member"], false);
    assert_eq!(out.status.code(), Some(1));
    for w in [r#"{"w": [0, 0, 0]}"#, r#"{"w": [0, 1, 1]}"#] {
        let out = posberg(&["member", arg(&a), "--w", w]);
        assert_eq!(json(&out)["member"], true);
        assert_eq!(out.status.code(), Some(0));
    }
}

#[test]
fn tree_subcommands() {
    let count = json(&posberg(&["trees", "5", "--count"]));
    assert_eq!(
        (count["positive"].as_u64(), count["total"].as_u64()),
        (Some(24), Some(180))
    );

    let shape = json(&posberg(&["trees", "--shape", "((1,2),(3,4))"]));
    assert_eq!(shape["hook_count"], 2);
    assert_eq!(
        posberg(&["trees", "--shape", "(1,2,3)"]).status.code(),
        Some(2)
    );

    let out = posberg(&["trees", "--bijection", "57316284"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["roundtrip"], true);

    let covering = json(&posberg(&["trees", "4", "--covering"]));
    assert_eq!(covering["maximal_chains"], 18);
    assert_eq!(covering["multiplicity"], 8);
}

#[test]
fn bound_exceeded_exits_three() {
    assert_eq!(
        posberg(&["--bound", "5", "trees", "6", "--count"])
            .status
            .code(),
        Some(3)
    );
    let dir = TempDir::new().unwrap();
    let m = file(&dir, "m.json", EXAMPLE);
    assert_eq!(
        posberg(&["--bound", "4", "bergman", arg(&m)]).status.code(),
        Some(3)
    );
}

#[test]
fn standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_posberg"))
        .args(["validate", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(EXAMPLE.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
