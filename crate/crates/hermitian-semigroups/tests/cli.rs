//! End-to-end tests of the command-line interface: output shape,
//! determinism, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermitian-semigroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn gaps_json_q2() {
    let text = stdout(&["gaps", "--q", "2", "--d", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let data = doc["data"].as_array().expect("data array");
    assert_eq!(data.len(), 3);
    assert_eq!(doc["meta"]["q"], 2);
    assert_eq!(doc["meta"]["genus"], 1);
    let triples: Vec<Vec<u64>> = data
        .iter()
        .map(|t| t.as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect())
        .collect();
    assert!(triples.contains(&vec![1, 0, 0]));
    assert!(triples.contains(&vec![0, 1, 0]));
    assert!(triples.contains(&vec![0, 0, 1]));
}

#[test]
fn counts_csv_q3() {
    let text = stdout(&["counts", "--q", "3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q,d,N,N1,N2,N3,h_d");
    assert!(lines[1].starts_with("3,1,33,"));
    assert!(lines[2].starts_with("3,2,31,"));
    assert!(lines[3].starts_with("3,4,31,"));
    assert!(text.ends_with('\n'));
    assert!(!text.contains('\r'));
}

#[test]
fn classify_example_triangle() {
    let text = stdout(&["classify", "--q", "2", "--points", "inf;0,0;w,w"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["data"][0]["type_d"], 3);
    assert_eq!(doc["data"][0]["collinear"], false);
}

#[test]
fn sigma_table_csv() {
    let text = stdout(&["sigma", "--q", "2", "--d", "3"]);
    assert_eq!(text, "i,0,1,2\n0,0,1,-1\n1,0,-1,-2\n2,-1,-2,-3\n");
}

#[test]
fn mingen_flags_empty_set() {
    let text = stdout(&["mingen", "--q", "2", "--d", "3"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["data"].as_array().unwrap().len(), 0);
    assert!(doc["meta"]["note"].as_str().unwrap().contains("empty"));

    let text = stdout(&["mingen", "--q", "4", "--d", "1"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["data"].as_array().unwrap().len(), 4);
}

#[test]
fn semigroup_box_default_bound() {
    let text = stdout(&["semigroup", "--q", "2", "--d", "1", "--format", "csv"]);
    // [0,2]^3 has 27 triples; 3 are gaps; header adds one line.
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a,b,c");
    assert_eq!(lines.len(), 1 + 27 - 3);
}

#[test]
fn orbits_q2() {
    let text = stdout(&["orbits", "--q", "2"]);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    assert_eq!(doc["data"][0]["orbits"], 2);
    assert_eq!(doc["data"][0]["expected"], 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["gaps", "--q", "3", "--d", "2", "--format", "json"],
        vec!["gaps", "--q", "3", "--d", "2", "--format", "csv"],
        vec!["sigma", "--q", "4", "--d", "5", "--format", "json"],
        vec!["counts", "--q", "5"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn argument_errors_exit_2() {
    // Non prime power q.
    assert_eq!(run(&["gaps", "--q", "6", "--d", "1"]).status.code(), Some(2));
    // d does not divide q + 1.
    assert_eq!(run(&["gaps", "--q", "3", "--d", "3"]).status.code(), Some(2));
    // Desk-scale cap.
    assert_eq!(run(&["counts", "--q", "32"]).status.code(), Some(2));
    // Missing required argument (clap).
    assert_eq!(run(&["gaps", "--d", "1"]).status.code(), Some(2));
    // Unknown subcommand (clap).
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // Malformed points.
    assert_eq!(
        run(&["classify", "--q", "2", "--points", "inf;0,0"]).status.code(),
        Some(2)
    );
    // Diagnostics go to stderr.
    let out = run(&["gaps", "--q", "6", "--d", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime power"));
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_subset_and_exit_codes() {
    let out = run(&["verify", "--suite", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS   1  q2-gap-exactness"));
    assert!(text.contains("PASS   2  q3-counts-and-coincidence"));
    // Unknown suite name is an argument error.
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}
