use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn stabclass(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stabclass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn example(name: &str) -> String {
    let r = stabclass(&["examples", name], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

#[test]
fn example_list_names_every_builtin() {
    let r = stabclass(&["examples"], "");
    assert_eq!(r.code, 0);
    for name in ["toric2d", "toric3d", "nonmobile", "shift-qca"] {
        assert!(r.stdout.contains(name), "{name} missing from {}", r.stdout);
    }
}

#[test]
fn toric_code_verifies() {
    let r = stabclass(&["verify", "-"], &example("toric2d"));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("lagrangian: yes"));
}

#[test]
fn non_lagrangian_code_fails_verification() {
    let r = stabclass(&["verify", "-"], &example("vertex-only"));
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("lagrangian: no"));
}

#[test]
fn malformed_json_is_a_usage_error() {
    let r = stabclass(&["verify", "-"], "{bad");
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("parse error"));
}

#[test]
fn unknown_fields_are_rejected() {
    let code = example("toric2d").replacen('{', "{\"colour\": 1,", 1);
    assert_eq!(stabclass(&["verify", "-"], &code).code, 2);
}

#[test]
fn unknown_example_is_a_usage_error() {
    assert_eq!(stabclass(&["examples", "nope"], "").code, 2);
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(stabclass(&["frobnicate"], "").code, 2);
    assert_eq!(stabclass(&["coarsen", "-", "--factors", "0,1"], &example("toric2d")).code, 2);
}

#[test]
fn classify_toric_code_as_json() {
    let r = stabclass(&["--format", "json", "classify", "-"], &example("toric2d"));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["class"], "0");
    assert_eq!(v["arf"], 0);
    assert_eq!(v["braiding"]["gram"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(v["braiding"]["theta"], serde_json::json!([0, 0, 2]));
}

#[test]
fn classify_rejects_non_mobile_code() {
    let r = stabclass(&["classify", "-"], &example("nonmobile"));
    assert_eq!(r.code, 1);
}

#[test]
fn coarsened_code_still_verifies() {
    let r = stabclass(&["coarsen", "-", "--factors", "2,1"], &example("toric2d"));
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(stabclass(&["verify", "-"], &r.stdout).code, 0);
}

#[test]
fn charges_report_cardinality() {
    let r = stabclass(&["charges", "-"], &example("toric2d"));
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("cardinality 4"), "{}", r.stdout);
}

#[test]
fn qca_created_code_verifies() {
    let qca = example("swap-qca");
    assert_eq!(stabclass(&["qca", "verify", "-"], &qca).code, 0);
    let code = stabclass(&["qca", "create", "-"], &qca);
    assert_eq!(code.code, 0, "{}", code.stderr);
    assert_eq!(stabclass(&["verify", "-"], &code.stdout).code, 0);
}

#[test]
fn witt_hyperbolic_plane_is_zero() {
    let form = r#"{"p": 3, "dim": 2, "gram": [[0, 1], [1, 0]]}"#;
    let r = stabclass(&["--format", "json", "witt", "-"], form);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["class"], "0", "{}", r.stdout);
}
