//! End-to-end checks of the command-line interface through the built binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_subcomp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .expect("stdin writes");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn gen(args: &[&str]) -> String {
    let out = run(&[&["gen"], args].concat(), "");
    assert!(out.status.success());
    stdout_of(&out)
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("missing {key} in report:\n{report}"))
}

#[test]
fn solve_min_degree_isolated_vertices() {
    let edge_list = "7 0\n";
    let out = run(&["solve", "min-degree", "--k", "2", "--format", "edgelist"], edge_list);
    assert!(out.status.success());
    let report = stdout_of(&out);
    assert_eq!(field(&report, "answer"), "YES");
    assert_eq!(field(&report, "provenance"), "constructive");
    assert_eq!(field(&report, "witness"), "[0,1,2,3,4,5,6]");
}

#[test]
fn solve_star_diamond_c7() {
    let g6 = gen(&["--family", "cycle", "--n", "7"]);
    let out = run(&["solve", "star-diamond", "--t", "3"], &g6);
    assert!(out.status.success());
    let report = stdout_of(&out);
    assert_eq!(field(&report, "answer"), "YES");
    assert_eq!(field(&report, "witness"), "[]");
}

#[test]
fn oracle_k1_single_vertex_is_no() {
    let g6 = gen(&["--family", "complete", "--n", "1"]);
    let out = run(&["oracle", "--target", "min-degree:1"], &g6);
    assert!(out.status.success());
    let report = stdout_of(&out);
    assert_eq!(field(&report, "answer"), "NO");
    assert!(field(&report, "input_digest").starts_with("sha256:"));
}

#[test]
fn convert_round_trip() {
    let g6 = gen(&["--family", "gnp", "--n", "9", "--p", "0.4", "--seed", "11"]);
    let as_edges = run(&["convert", "--from", "graph6", "--to", "edgelist"], &g6);
    assert!(as_edges.status.success());
    let back = run(
        &["convert", "--from", "edgelist", "--to", "graph6"],
        &stdout_of(&as_edges),
    );
    assert!(back.status.success());
    assert_eq!(stdout_of(&back), g6);
}

#[test]
fn gen_is_deterministic() {
    let a = gen(&["--family", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    let b = gen(&["--family", "gnp", "--n", "8", "--p", "0.5", "--seed", "7"]);
    assert_eq!(a, b);
}

#[test]
fn gen_disjoint_union_of_diamonds() {
    let g6 = gen(&["--family", "disjoint-union", "--of", "diamond", "--count", "2"]);
    let edges = run(&["convert", "--from", "graph6", "--to", "edgelist"], &g6);
    let text = stdout_of(&edges);
    assert!(text.starts_with("8 10\n"), "got {text}");
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["solve", "min-degree"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["oracle", "--target", "chordal:1"], "A_");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown target"));
}

#[test]
fn budget_refusal_exits_3() {
    let g6 = gen(&["--family", "star", "--t", "3"]);
    let out = run(&["solve", "star-diamond", "--t", "3", "--budget", "1"], &g6);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn reports_are_reproducible() {
    let g6 = gen(&["--family", "gnp", "--n", "10", "--p", "0.3", "--seed", "42"]);
    let strip_timing = |report: &str| {
        report
            .lines()
            .filter(|l| !l.starts_with("elapsed_ms="))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = run(&["solve", "min-degree", "--k", "2"], &g6);
    let b = run(&["solve", "min-degree", "--k", "2"], &g6);
    assert!(a.status.success() && b.status.success());
    assert_eq!(strip_timing(&stdout_of(&a)), strip_timing(&stdout_of(&b)));
}

#[test]
fn batch_mode_one_line_per_graph() {
    let mut lines = String::new();
    for seed in 0..4 {
        lines.push_str(&gen(&[
            "--family", "gnp", "--n", "6", "--p", "0.5", "--seed", &seed.to_string(),
        ]));
    }
    let out = run(&["solve", "star-diamond", "--t", "3", "--batch"], &lines);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 4);
    for line in text.lines() {
        assert!(line.contains("answer="), "got {line}");
        assert!(line.contains("input_digest=sha256:"), "got {line}");
    }
}

#[test]
fn yes_witness_reverifies_through_recognize() {
    // the report's witness, applied by hand, must make recognize say YES
    let g6 = gen(&["--family", "gnp", "--n", "9", "--p", "0.5", "--seed", "0"]);
    let out = run(&["solve", "star-diamond", "--t", "3", "--json"], &g6);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(report["answer"], "YES");
    let witness: Vec<usize> = report["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();

    let g = subcomp::format::decode_graph6(g6.trim()).unwrap();
    let s = subcomp::VertexSet::from_vertices(g.n(), witness);
    let complemented = g.subgraph_complement(&s).unwrap();
    let comp_g6 = subcomp::format::encode_graph6(&complemented);
    let rec = run(&["recognize", "--target", "star-diamond:3"], &comp_g6);
    assert!(rec.status.success());
    assert_eq!(field(&stdout_of(&rec), "answer"), "YES");
}

#[test]
fn kernelize_shrinks_large_instance() {
    let g6 = gen(&["--family", "complete", "--n", "30"]);
    let out = run(&["kernelize", "--k", "2", "--json"], &g6);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(report["k"], 2);
    assert_eq!(report["graph"], "Bw"); // K3, the trivial yes-instance for k=2

    let small = gen(&["--family", "cycle", "--n", "5"]);
    let out = run(&["kernelize", "--k", "2"], &small);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(field(&text, "k"), "2");
    assert!(text.lines().any(|l| l == small.trim()));
}

#[test]
fn no_certificate_suppresses_witness() {
    let g6 = gen(&["--family", "diamond"]);
    let out = run(&["solve", "star-diamond", "--t", "3", "--no-certificate"], &g6);
    assert!(out.status.success());
    let report = stdout_of(&out);
    assert_eq!(field(&report, "answer"), "YES");
    assert!(!report.contains("witness="));
}
