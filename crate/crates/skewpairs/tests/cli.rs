//! End-to-end checks of the binary: exit-code contract, fixture I/O,
//! and report determinism at the process level.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewpairs"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin writable");
    let out = child.wait_with_output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn standard_pair_json() -> String {
    // p = 3 standard pair: alpha = diag(1, rho, rho^2), beta = shift
    serde_json::json!({
        "alpha": [[["1", "0"], ["0", "0"], ["0", "0"]],
                  [["0", "0"], ["0", "1"], ["0", "0"]],
                  [["0", "0"], ["0", "0"], ["-1", "-1"]]],
        "beta": [[["0", "0"], ["0", "0"], ["1", "0"]],
                 [["1", "0"], ["0", "0"], ["0", "0"]],
                 [["0", "0"], ["1", "0"], ["0", "0"]]]
    })
    .to_string()
}

#[test]
fn report_passes_and_is_deterministic() {
    let out1 = bin()
        .args(["report", "--p", "3", "--suite", "toral", "--seed", "7"])
        .output()
        .expect("binary runs");
    assert_eq!(out1.status.code(), Some(0));
    let out2 = bin()
        .args(["report", "--p", "3", "--suite", "toral", "--seed", "7", "--sequential"])
        .output()
        .expect("binary runs");
    assert_eq!(out1.stdout, out2.stdout, "reports are not byte-identical");
}

#[test]
fn env_var_sets_default_primes() {
    let out = bin()
        .args(["report", "--suite", "toral", "--format", "text"])
        .env("SKEWPAIRS_PRIMES", "3,5")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p=3"));
    assert!(text.contains("p=5"));
    assert!(!text.contains("p=7"));
}

#[test]
fn unsupported_prime_is_usage_error() {
    let out = bin().args(["report", "--p", "2"]).output().expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pairs_verify_standard_pair() {
    let (code, stdout, _) = run_with_stdin(&["pairs-verify"], &standard_pair_json());
    assert_eq!(code, 0, "stdout: {stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["skew_relation"], true);
    assert_eq!(v["alpha_unit"], true);
    assert_eq!(v["beta_unit"], true);
}

#[test]
fn pairs_verify_rejects_commuting_pair() {
    let broken = serde_json::json!({
        "alpha": [[["1", "0"], ["0", "0"], ["0", "0"]],
                  [["0", "0"], ["1", "0"], ["0", "0"]],
                  [["0", "0"], ["0", "0"], ["1", "0"]]],
        "beta": [[["1", "0"], ["0", "0"], ["0", "0"]],
                 [["0", "0"], ["1", "0"], ["0", "0"]],
                 [["0", "0"], ["0", "0"], ["1", "0"]]]
    })
    .to_string();
    let (code, stdout, _) = run_with_stdin(&["pairs-verify"], &broken);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["skew_relation"], false);
}

#[test]
fn parse_error_is_usage_error_with_position() {
    let (code, _, stderr) = run_with_stdin(&["pairs-verify"], "{not json");
    assert_eq!(code, 2);
    assert!(stderr.contains("line"), "no position in: {stderr}");
}

#[test]
fn slot_move_preserves_relation() {
    let req = format!(
        r#"{{"pair": {}, "f": [["1", "0"], ["1", "0"], ["0", "0"]], "move": "t"}}"#,
        standard_pair_json()
    );
    let (code, stdout, stderr) = run_with_stdin(&["slot"], &req);
    assert_eq!(code, 0, "stderr: {stderr}");
    // output is itself a valid pair fixture
    let (code, verdict, _) = run_with_stdin(&["pairs-verify"], &stdout);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&verdict).unwrap();
    assert_eq!(v["skew_relation"], true);
}

#[test]
fn lift_round_trip() {
    // perturb the standard pair by eps times a small integer matrix
    let prob = serde_json::json!({
        "alpha0": {
            "body": [[["1", "0"], ["0", "0"], ["0", "0"]],
                     [["0", "0"], ["0", "1"], ["0", "0"]],
                     [["0", "0"], ["0", "0"], ["-1", "-1"]]],
            "slope": [[["1", "0"], ["2", "0"], ["0", "0"]],
                      [["0", "0"], ["1", "0"], ["3", "0"]],
                      [["1", "0"], ["0", "0"], ["1", "0"]]]
        },
        "beta0": {
            "body": [[["0", "0"], ["0", "0"], ["1", "0"]],
                     [["1", "0"], ["0", "0"], ["0", "0"]],
                     [["0", "0"], ["1", "0"], ["0", "0"]]],
            "slope": [[["0", "0"], ["1", "0"], ["1", "0"]],
                      [["2", "0"], ["0", "0"], ["0", "0"]],
                      [["0", "0"], ["0", "0"], ["1", "0"]]]
        }
    })
    .to_string();
    let (code, stdout, stderr) = run_with_stdin(&["lift", "--unit"], &prob);
    assert_eq!(code, 0, "stderr: {stderr}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v.get("alpha").is_some() && v.get("beta").is_some());
}

#[test]
fn dims_certificates_pass() {
    let out = bin()
        .args(["dims", "--p", "3", "--format", "text"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("depth=4 rank=8"), "got: {text}");
}
