//! End-to-end tests of the binary: the documented invocations, exit codes,
//! JSON byte-stability and DOT output.

use std::process::{Command, Output};

fn plactica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plactica"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = plactica(args);
    assert!(
        out.status.success(),
        "{:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rs_matches_the_worked_pair() {
    let out = stdout(&["rs", "--type", "c", "1 -1 1 -1", "--json"]);
    assert_eq!(
        out.trim(),
        r#"{"P":{"rows":[[-2,1],[-1,2]],"shape":[2,2],"type":"c"},"Q":{"rows":[[1,2],[3,4]],"shape":[2,2]}}"#
    );
    let out = stdout(&["rs", "--type", "d", "1 -1 1 -1", "--json"]);
    assert_eq!(
        out.trim(),
        r#"{"P":{"rows":[[1],[-1],[1],[-1]],"shape":[1,1,1,1],"type":"d"},"Q":{"rows":[[1],[2],[3],[4]],"shape":[1,1,1,1]}}"#
    );
}

#[test]
fn congruent_and_syt() {
    let out = plactica(&["congruent", "--type", "c", "-1 1 1", "2 -2 1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "true");
    assert_eq!(stdout(&["syt", "2 1"]).trim(), "2");
}

#[test]
fn roundtrip_through_rs_inv() {
    let pair = stdout(&["rs", "--type", "c", "2 1 -1", "--json"]);
    let back = stdout(&["rs-inv", "--type", "c", pair.trim(), "--json"]);
    assert_eq!(back.trim(), r#"{"rows":[[2],[1],[-1]],"type":"c"}"#);
}

#[test]
fn exit_codes() {
    // bad input: 1
    let out = plactica(&["psym", "--type", "a", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // clap usage error: also input, 1
    let out = plactica(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    // missing budget on an enumerative command: 1
    let out = plactica(&["class", "--type", "a", "-1 -1"]);
    assert_eq!(out.status.code(), Some(1));
    // exhausted budget: 3
    let out = plactica(&["graph", "--type", "b", "-1", "--rank", "3", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
    // help: 0
    let out = plactica(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        vec!["rs", "--type", "b", "0 -1 2", "--json"],
        vec![
            "tensor", "1", "1", "--type", "d", "--budget", "100000", "--json",
        ],
        vec![
            "class", "--type", "c", "-1 1 1", "--budget", "1000", "--json",
        ],
    ] {
        let a = stdout(&args);
        let b = stdout(&args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn graph_emits_bfs_ordered_dot() {
    let dot = stdout(&[
        "graph", "--type", "c", "-2 -1", "--rank", "2", "--budget", "100",
    ]);
    assert!(dot.starts_with("digraph crystal {"));
    // five vertices of the rank-2 component, highest first
    assert!(dot.contains("n0 [label=\"-2 -1\"]"));
    let nodes = dot
        .lines()
        .filter(|l| l.contains("[label=") && !l.contains("->"))
        .count();
    assert_eq!(nodes, 5);
    assert!(dot.contains("->"));
    // deterministic across parallel and sequential runs
    let par = stdout(&[
        "graph",
        "--type",
        "c",
        "-2 -1",
        "--rank",
        "2",
        "--budget",
        "100",
        "--parallel",
    ]);
    assert_eq!(dot, par);
}

#[test]
fn verify_single_suite() {
    let out = stdout(&["verify", "admissibility"]);
    assert!(out.contains("[PASS] admissibility"));
    let out = plactica(&["verify", "bogus-name"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn stdin_and_file_inputs() {
    use std::io::Write;
    // file input
    let dir = std::env::temp_dir().join("plactica-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tableau.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, r#"{{"type":"c","shape":[2,2],"rows":[[-2,1],[-1,2]]}}"#).unwrap();
    let out = stdout(&["tableau-check", "--file", path.to_str().unwrap()]);
    assert_eq!(out.trim(), "true");
    // stdin input
    let mut child = Command::new(env!("CARGO_BIN_EXE_plactica"))
        .args(["psym", "--type", "c", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"-2 -1").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "-2\n-1");
}

#[test]
fn straighten_text_form() {
    let out = stdout(&["straighten", "--type", "b", "1 -1"]);
    assert_eq!(out.trim(), "(-q^4) * [-1 1] + (-q) * [0 0]");
}
