//! End-to-end tests of the `coedge` binary: output bytes, exit codes, and
//! determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn coedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coedge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn coedge_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coedge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("coedge-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn construct_emits_known_graph6() {
    let out = coedge(&["construct", "--family", "complete", "--m", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "Bw\n");

    let out = coedge(&["construct", "--family", "grid", "--p", "4", "--q", "3"]);
    assert_eq!(code(&out), 0);
    let line = stdout(&out);
    // Determinism: byte-identical on a second run.
    let again = coedge(&["construct", "--family", "grid", "--p", "4", "--q", "3"]);
    assert_eq!(stdout(&again), line);
}

#[test]
fn construct_usage_errors() {
    let out = coedge(&["construct", "--family", "nosuch"]);
    assert_eq!(code(&out), 64);
    let out = coedge(&["construct", "--family", "grid", "--p", "4"]);
    assert_eq!(code(&out), 64);
    let out = coedge(&["construct"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn classify_exit_codes_follow_the_verdict() {
    let g74 = stdout(&coedge(&["construct", "--family", "grid", "--p", "7", "--q", "4"]));
    let out = coedge_stdin(&["classify", "--theorem", "1.3"], &g74);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("outcome: Grid(7,4)"));

    // k = 5 < 8 puts grid(4,3) below the 3k/4 threshold: unmet hypotheses.
    let g43 = stdout(&coedge(&["construct", "--family", "grid", "--p", "4", "--q", "3"]));
    let out = coedge_stdin(&["classify", "--theorem", "1.3"], &g43);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("HypothesesNotMet"));

    let shri = stdout(&coedge(&["construct", "--family", "shrikhande"]));
    let out = coedge_stdin(&["classify", "--theorem", "4.1"], &shri);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("outcome: Shrikhande"));

    // Three distinct eigenvalues fail the 1.2 hypotheses.
    let out = coedge_stdin(&["classify", "--theorem", "1.2"], &shri);
    assert_eq!(code(&out), 1);

    let out = coedge_stdin(&["classify", "--theorem", "9.9"], &shri);
    assert_eq!(code(&out), 64);
}

#[test]
fn spectrum_threshold_comparisons() {
    let ext = stdout(&coedge(&["construct", "--family", "ext-petersen", "--s", "2"]));
    let out = coedge_stdin(&["spectrum", "--threshold", "-3"], &ext);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("theta_min == -3"));

    let out = coedge_stdin(&["spectrum", "--threshold", "-2"], &ext);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("theta_min < -2"));

    let out = coedge_stdin(&["spectrum", "--threshold", "-7/2"], &ext);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("theta_min > -7/2"));

    let out = coedge_stdin(&["spectrum", "--threshold", "x"], &ext);
    assert_eq!(code(&out), 64);
}

#[test]
fn check_reports_parameters_and_exit_status() {
    let g = stdout(&coedge(&["construct", "--family", "grid", "--p", "4", "--q", "3"]));
    let out = coedge_stdin(&["check"], &g);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("regular: yes (k = 5)"));
    assert!(text.contains("co-edge-regular: yes (c = 2)"));
    assert!(text.contains("strongly co-edge-regular: yes (ell = 3)"));
    assert!(text.contains("moment identities: hold"));

    // A path is none of these.
    let out = coedge_stdin(&["check", "--format", "edgelist"], "4 3\n0 1\n1 2\n2 3\n");
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("regular: no"));
}

#[test]
fn json_reports_are_valid_and_float_free() {
    let g = stdout(&coedge(&["construct", "--family", "grid", "--p", "4", "--q", "3"]));
    for args in [
        vec!["check", "--json"],
        vec!["spectrum", "--json"],
        vec!["classify", "--theorem", "1.2", "--json"],
    ] {
        let out = coedge_stdin(&args, &g);
        let text = stdout(&out);
        let value: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("bad JSON from {args:?}: {e}"));
        assert_eq!(value["schema_version"], 1);
        assert_eq!(value["input"]["format"], "graph6");
        assert_no_floats(&value);
    }
}

fn assert_no_floats(v: &serde_json::Value) {
    match v {
        serde_json::Value::Number(n) => {
            assert!(n.is_u64() || n.is_i64(), "float {n} in report");
        }
        serde_json::Value::Array(xs) => xs.iter().for_each(assert_no_floats),
        serde_json::Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn iso_compares_files() {
    let shri = stdout(&coedge(&["construct", "--family", "shrikhande"]));
    let g44 = stdout(&coedge(&["construct", "--family", "grid", "--p", "4", "--q", "4"]));
    let a = write_temp("shri.g6", &shri);
    let b = write_temp("g44.g6", &g44);
    let out = coedge(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "not isomorphic\n");

    let out = coedge(&["iso", a.to_str().unwrap(), a.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "isomorphic\n");

    let out = coedge(&["iso", "-", "-"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn search_output_is_deterministic_and_capped() {
    let a = coedge(&["search", "--n", "6", "--k", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a).lines().count(), 2);
    let b = coedge(&["search", "--n", "6", "--k", "3"]);
    assert_eq!(a.stdout, b.stdout);

    // Parity violation is a usage error.
    let out = coedge(&["search", "--n", "5", "--k", "3"]);
    assert_eq!(code(&out), 64);

    // Cap override via the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_coedge"))
        .args(["search", "--n", "6", "--k", "3"])
        .env("COEDGE_SEARCH_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(code(&out), 64);
    let out = Command::new(env!("CARGO_BIN_EXE_coedge"))
        .args(["search", "--n", "6", "--k", "3"])
        .env("COEDGE_SEARCH_MAX_N", "banana")
        .output()
        .unwrap();
    assert_eq!(code(&out), 64);
}

#[test]
fn parse_errors_exit_65() {
    let out = coedge_stdin(&["check"], "garbage!!\n");
    assert_eq!(code(&out), 65);
    let out = coedge_stdin(&["check", "--format", "edgelist"], "2 1\n0 0\n");
    assert_eq!(code(&out), 65);
    let out = coedge(&["check", "--in", "/nonexistent/path.g6"]);
    assert_eq!(code(&out), 65);
    // n = 0 parses but is unusable.
    let out = coedge_stdin(&["check"], "?\n");
    assert_eq!(code(&out), 65);
}

#[test]
fn help_and_version_exit_zero() {
    let out = coedge(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("construct"));
    let out = coedge(&["--version"]);
    assert_eq!(code(&out), 0);
    // Unknown flags are usage errors.
    let out = coedge(&["search", "--n", "6", "--k", "3", "--json"]);
    assert_eq!(code(&out), 64);
}
