use std::process::{Command, Output};

use serde_json::Value;

use ribbonforge::io::{parse_graph, graph_to_json};

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonforge"))
        .args(args)
        .env("RIBBONFORGE_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    format!("{DATA}{name}")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn digon_r_golden() {
    let o = run(&["compute-r", "--input", &data("digon.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "y*z*w + x + 1");
    let o = run(&["compute-r", "--input", &data("digon.json"), "--method", "statesum"]);
    assert_eq!(stdout(&o).trim(), "y*z*w + x + 1");
}

#[test]
fn point_evaluation() {
    let o = run(&["compute-r", "--input", &data("digon.json"), "--point", "x=2,y=1/2,z=1,w=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7/2");
}

#[test]
fn invalid_input_exits_2() {
    let o = run(&["compute-r", "--input", &data("orphan.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["compute-r", "--input", &data("missing.json")]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
}

#[test]
fn passing_suite_exits_0() {
    let o = run(&["verify", "transpoly", "--max-edges", "2", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn failing_suite_exits_3_with_counterexample() {
    let o = run(&["verify", "move-invariance", "--seed", "7", "--count", "50", "--max-edges", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], Value::Bool(false));
    assert!(v.get("counterexample").is_some());
}

#[test]
fn dual_round_trips_through_json() {
    let o = run(&["dual", "--input", &data("digon.json")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let g = parse_graph(&text).unwrap();
    assert_eq!(graph_to_json(&g).trim(), text.trim());
    let original = parse_graph(&std::fs::read_to_string(data("digon.json")).unwrap()).unwrap();
    assert_eq!(g.dual().full_stats().eg, original.full_stats().eg);
}

#[test]
fn bracket_and_canonical() {
    let o = run(&["bracket", "--input", &data("hopf.json")]);
    assert_eq!(stdout(&o).trim(), "A^2*d + B^2*d + 2*A*B");
    let o = run(&["canonical", "--word", "abab", "--negative", "ab"]);
    assert_eq!(stdout(&o).trim(), "(2, 0, 1)");
}

#[test]
fn json_polynomial_output_parses() {
    let o = run(&["compute-q", "--input", &data("digon.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let _: Value = serde_json::from_str(&stdout(&o)).unwrap();
}
