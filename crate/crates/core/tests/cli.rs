use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_peanocube"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("peanocube-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn generated(name: &str, args: &[&str]) -> String {
    let p = tmp(name);
    let mut a = vec!["generate"];
    a.extend_from_slice(args);
    a.extend(["-o", p.to_str().unwrap()]);
    assert_eq!(run(&a).status.code(), Some(0));
    p.to_str().unwrap().to_string()
}

#[test]
fn analyze_hypercube() {
    let q3 = generated("q3.json", &["hypercube", "3"]);
    let o = run(&["analyze", &q3]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["n"], 8);
    assert_eq!(v["idim"], 3);
    assert_eq!(v["eulerSum"], 1);
    assert_eq!(v["flags"]["median"], true);
}

#[test]
fn recognize_exit_codes() {
    let m41 = generated("m41.json", &["fixture", "M41"]);
    assert_eq!(run(&["recognize", &m41, "--class", "partial-cube"]).status.code(), Some(0));
    let o = run(&["recognize", &m41, "--class", "peano"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["result"], false);
}

#[test]
fn parse_errors_exit_2() {
    let p = tmp("bad.json");
    std::fs::write(&p, "{bad").unwrap();
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "ParseError");
    assert_eq!(run(&["analyze", "/nonexistent/graph.json"]).status.code(), Some(2));
}

#[test]
fn other_errors_exit_3() {
    let q3 = generated("q3b.json", &["hypercube", "3"]);
    let o = run(&["retract", &q3, "--onto", "0,7"]);
    assert_eq!(o.status.code(), Some(3));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "NotConvex");
    let m41 = generated("m41b.json", &["fixture", "M41"]);
    assert_eq!(run(&["helly", &m41]).status.code(), Some(3));
}

#[test]
fn hull_and_median() {
    let c6 = generated("c6.json", &["cycle", "6"]);
    let v = json(&run(&["hull", &c6, "--set", "0,2"]));
    assert_eq!(v["hull"], serde_json::json!([0, 1, 2]));
    let o = run(&["median", &c6, "0", "2", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let q3 = generated("q3c.json", &["hypercube", "3"]);
    let o = run(&["median", &q3, "1", "2", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn contract_hexagon() {
    let c6 = generated("c6b.json", &["cycle", "6"]);
    let out = tmp("c4.json");
    let o = run(&["contract", &c6, "--class", "0", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let c4 = json(&run(&["analyze", out.to_str().unwrap()]));
    assert_eq!(c4["n"], 4);
}

#[test]
fn invariants_suite_passes() {
    let o = run(&["invariants", "--suite", "fixtures"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn pretty_output_is_not_json() {
    let c6 = generated("c6c.json", &["cycle", "6"]);
    let o = run(&["--pretty", "theta", &c6]);
    assert_eq!(o.status.code(), Some(0));
    assert!(serde_json::from_slice::<Value>(&o.stdout).is_err());
    assert!(!o.stdout.is_empty());
}

#[test]
fn export_dot() {
    let c6 = generated("c6d.json", &["cycle", "6"]);
    let o = run(&["export-dot", &c6]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("graph"));
}
