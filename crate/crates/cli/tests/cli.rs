use std::process::{Command, Output};

use serde_json::Value;

fn linkgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkgraph")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn build_dipole_link_graph_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("dipole3.txt");
    std::fs::write(&file, "a b\na b\na b\n").unwrap();
    let out = linkgraph(&["build", "--ell", "1", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn build_formats() {
    let dot = linkgraph(&["build", "--ell", "2", "--format", "dot", "@cycle:4"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("graph"));
    let arc = linkgraph(&["build", "--ell", "2", "--kind", "arc", "@dipole:3"]);
    assert_eq!(json(&arc)["vertices"].as_array().unwrap().len(), 12);
    let bad = linkgraph(&["build", "--kind", "arc", "--format", "edgelist", "@dipole:3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn edgelist_output_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("l2.txt");
    let out = linkgraph(&["build", "--ell", "2", "--format", "edgelist", "--out", file.to_str().unwrap(), "@petersen"]);
    assert!(out.status.success());
    let stats = linkgraph(&["stats", "--ell", "0", file.to_str().unwrap()]);
    let v = json(&stats);
    assert_eq!(v["order"], 30);
    assert_eq!(v["size"], 60);
}

#[test]
fn recursive_colouring_of_k5_at_four() {
    let out = linkgraph(&["color", "--method", "recursive", "--ell", "4", "@complete:5"]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["colours"].as_u64().unwrap() <= 3);
    assert_eq!(v["proper"], true);
}

#[test]
fn exact_and_greedy_colouring() {
    let exact = json(&linkgraph(&["color", "--method", "exact", "--ell", "1", "@dipole:4"]));
    assert_eq!(exact["colours"], 4);
    let greedy = json(&linkgraph(&["color", "--method", "greedy", "--ell", "1", "@petersen"]));
    assert_eq!(greedy["proper"], true);
}

#[test]
fn minor_on_wheel() {
    let v = json(&linkgraph(&["minor", "--ell", "1", "@wheel:5"]));
    assert!(v["bound"].as_u64().unwrap() >= 5);
    assert_eq!(v["witness"]["branch_sets"].as_array().unwrap().len() as u64, v["bound"].as_u64().unwrap());
}

#[test]
fn verify_counting_identity() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.txt");
    let gen = linkgraph(&["gen", "complete:4", "--out", file.to_str().unwrap()]);
    assert!(gen.status.success());
    let out = linkgraph(&["verify", "--claims", "Obs3.1", "--ell", "1..4", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["report_version"], 1);
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r["status"] == "pass" && r["claim"] == "Obs3.1"));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--claims", "Thm1,Lem4", "--ell", "0..3", "@petersen", "@random:5:7:11"];
    let a = linkgraph(&args);
    let b = linkgraph(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn limit_and_oracle_errors_exit_three() {
    let out = linkgraph(&["build", "--ell", "6", "--limit", "100", "@complete:5"]);
    assert_eq!(out.status.code(), Some(3));
    let d: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(d["error"], "limit_exceeded");
    let out = linkgraph(&["color", "--method", "exact", "--ell", "3", "--oracle-cap", "10", "@complete:5"]);
    assert_eq!(out.status.code(), Some(3));
    let d: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(d["error"], "oracle_too_large");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(linkgraph(&["build", "--ell", "x", "@petersen"]).status.code(), Some(2));
    assert_eq!(linkgraph(&["verify", "--ell", "3..1"]).status.code(), Some(2));
    assert_eq!(linkgraph(&["gen", "nonsense:1"]).status.code(), Some(2));
    assert_eq!(linkgraph(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("loop.txt");
    std::fs::write(&file, "a a\n").unwrap();
    let out = linkgraph(&["stats", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loop"));
}
