//! End-to-end runs of the `arcconn` binary with golden outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arcconn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn graph_file(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIOD: &str = "# simple triod\nc l1\nc l2\nc l3\n";
const THETA: &str = "a b\na b\na b\n";
const LOLLIPOP: &str = "a a\na b\n";
const K33: &str = "a1 b1\na1 b2\na1 b3\na2 b1\na2 b2\na2 b3\na3 b1\na3 b2\na3 b3\n";
const STAR5: &str = "c 1\nc 2\nc 3\nc 4\nc 5\n";

#[test]
fn acnum_golden() {
    let d = tempfile::tempdir().unwrap();
    let triod = graph_file(d.path(), "triod.txt", TRIOD);
    let o = run(&["acnum", s(&triod), "--witness"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "ac=2 omega=false levels=2:yes,3:no,4:no,5:no,6:no,7:no counterexample=v:|e:0x1,1x1,2x1\n"
    );
    let theta = graph_file(d.path(), "theta.txt", THETA);
    let o = run(&["acnum", s(&theta)]);
    assert_eq!(stdout(&o), "ac=omega omega=true levels=2:yes,3:yes,4:yes,5:yes,6:yes,7:yes\n");
    let o = run(&["--json", "acnum", s(&triod), "--cap", "3"]);
    assert_eq!(stdout(&o), "{\"ac\":2,\"omega\":false,\"levels\":\"2:yes,3:no\"}\n");
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let d = tempfile::tempdir().unwrap();
    let bad = graph_file(d.path(), "bad.txt", "a b c\n");
    let o = run(&["acnum", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    assert_eq!(run(&["acnum", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["search", "--edges-min", "1", "--edges-max", "2", "--profile", "=9"]);
    assert_eq!(o.status.code(), Some(2));
    let split = graph_file(d.path(), "split.txt", "a a\nb b\n");
    assert_eq!(run(&["acnum", s(&split)]).status.code(), Some(2));
}

#[test]
fn classify_golden() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["classify", s(&graph_file(d.path(), "l.txt", LOLLIPOP))]);
    assert_eq!(
        stdout(&o),
        "class=lollipop omega=true rules=[] branch_points=1 max_branch_degree=3 reduced_class=circle \
         reduced_vertices=1 reduced_edges=1 reduced_degenerate=false\n"
    );
    let o = run(&["classify", s(&graph_file(d.path(), "k.txt", K33))]);
    assert!(stdout(&o).starts_with("class=other omega=false rules=[3+branch] "));
    let o = run(&["classify", s(&graph_file(d.path(), "s.txt", STAR5))]);
    assert!(stdout(&o).contains("rules=[deg>=5]"));
    assert!(stdout(&o).contains("reduced_degenerate=true"));
}

#[test]
fn homeo_exit_status() {
    let d = tempfile::tempdir().unwrap();
    let circle = graph_file(d.path(), "c.txt", "x x\n");
    let square = graph_file(d.path(), "sq.txt", "a b\nb c\nc d\nd a\n");
    let o = run(&["homeo", s(&circle), s(&square)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "homeomorphic=true\n");
    let o = run(&["homeo", s(&circle), s(&graph_file(d.path(), "t.txt", THETA))]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "homeomorphic=false\n");
}

#[test]
fn enumerate_golden() {
    let d = tempfile::tempdir().unwrap();
    let out = d.path().join("census.jsonl");
    let o = run(&["enumerate", "--edges", "2", "--out", s(&out)]);
    assert_eq!(
        stdout(&o),
        "canon=0102 vertices=1 edges=2 planar=true\n\
         canon=02000101 vertices=2 edges=2 planar=true\n\
         count=2 edges=2\n"
    );
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written.lines().count(), 2);
    let rec: serde_json::Value = serde_json::from_str(written.lines().next().unwrap()).unwrap();
    assert_eq!(rec["graph"], "0 0\n0 0\n");
    let o = run(&["enumerate", "--edges", "9", "--planar-only"]);
    assert!(stdout(&o).ends_with("count=4624 edges=9\n"));
}

#[test]
fn search_with_resume() {
    let d = tempfile::tempdir().unwrap();
    let ck = d.path().join("ck.jsonl");
    let args = ["search", "--edges-min", "3", "--edges-max", "4", "--profile", "=3,!4", "--resume", s(&ck), "--jobs", "2"];
    let first = run(&args);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.ends_with("matches=6 candidates=20 evaluated=20 resumed=0\n"), "{text}");
    let again = run(&args);
    assert!(stdout(&again).ends_with("matches=6 candidates=20 evaluated=0 resumed=20\n"));
    let body = |t: &str| t.lines().filter(|l| l.starts_with("canon=")).map(String::from).collect::<Vec<_>>();
    assert_eq!(body(&text), body(&stdout(&again)));
    let header = std::fs::read_to_string(&ck).unwrap().lines().next().unwrap().to_string();
    assert_eq!(
        header,
        "{\"format\":\"arcconn-search/1\",\"edges_min\":3,\"edges_max\":4,\"planar\":false,\"profile\":\"=3,!4\"}"
    );
}

#[test]
fn corpus_verification_passes_and_detects_injected_fault() {
    let o = run(&["verify-paper", "--no-refine"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains("status=PASS subject=prism4 check=ac expected=6 actual=6"));
    assert!(text.ends_with("failed=0\n"));
    let o = run(&["verify-paper", "--no-refine", "--expect", "k33=7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("status=FAIL subject=k33 check=ac expected=7 actual=6"));
    assert_eq!(run(&["verify-paper", "--expect", "nosuch=3"]).status.code(), Some(2));
}
