use std::process::Command;

use serde_json::Value;
use zerocover::covers::{parse_cover, serialize_cover};
use zerocover::Multigraph;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = Command::new(env!("CARGO_BIN_EXE_zerocover")).args(&full).output().unwrap();
    let report: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout))
    });
    (out.status.code().unwrap(), report)
}

fn keys(v: &Value) -> Vec<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

#[test]
fn cover_commands() {
    let choi = data("choi.cov");
    assert_eq!(run(&["cover", "check", &choi, "--exact", "2"]).0, 0);
    assert_eq!(run(&["cover", "check", &choi, "--exact", "3"]).0, 1);
    assert_eq!(run(&["cover", "check", &choi, "--min-mult", "2"]).0, 0);
    let (code, r) = run(&["cover", "check", &choi, "--profile"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["histogram"]["2"], 30);
    assert_eq!(r["witnesses"]["reciprocal_sum"], "2");

    let (code, r) = run(&["cover", "spectrum", &data("two_halves.cov")]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["spectrum"], serde_json::json!(["0", "1/2"]));

    let (code, r) = run(&["cover", "split", &data("halves4.cov"), "--m", "4", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["split"]["part"], serde_json::json!([1, 2]));
    assert_eq!(run(&["cover", "split", &choi, "--m", "2", "--n", "1"]).0, 1);
    assert_eq!(run(&["cover", "split", &choi, "--m", "3", "--n", "1"]).0, 2);
}

#[test]
fn generated_cover_round_trips() {
    let (code, r) = run(&["cover", "gen", "--m", "3", "--steps", "5", "--seed", "42"]);
    assert_eq!(code, 0);
    assert_eq!(r["seed"], 42);
    let text = r["witnesses"]["cover"].as_str().unwrap();
    let a = parse_cover(text).unwrap();
    assert!(a.is_exact_m_cover(3).unwrap());
    assert_eq!(serialize_cover(&a), text);
    let (_, default) = run(&["cover", "gen", "--m", "1", "--steps", "1"]);
    assert_eq!(default["seed"], 0);
}

#[test]
fn zerosum_commands() {
    let cov = data("halves4.cov");
    let el = data("halves4.elements");
    let (code, r) = run(&["zerosum", "find", &cov, "--group", "2:1", "--elements", &el, "--h", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["indices"], serde_json::json!([1, 2, 3, 6]));
    let (code, r) = run(&[
        "zerosum", "verify-t21", &cov, "--group", "2:1", "--elements", &el, "--h", "1", "--alpha", "-1/2", "--target", "1",
    ]);
    assert_eq!(code, 0);
    assert_ne!(r["witnesses"]["count"], 1);
    assert_eq!(run(&["zerosum", "find", &cov, "--group", "2:1", "--elements", &el, "--h", "2"]).0, 2);
    let (code, r) = run(&["zerosum", "egz", &cov, "--group", "2:1", "--elements", &el, "--q", "2"]);
    assert_eq!(code, 0);
    assert!(!r["witnesses"]["indices"].as_array().unwrap().is_empty());
    assert_eq!(run(&["zerosum", "egz", &cov, "--group", "2:1", "--elements", &el, "--q", "3"]).0, 2);
    let (code, r) = run(&["zerosum", "c22", &cov, "--m", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["weighted_sum"], "4");
    let (code, r) = run(&["zerosum", "c22", &cov, "--m", "2", "--j", "1,2"]);
    assert_eq!(code, 0);
    assert_ne!(r["witnesses"]["indices"], serde_json::json!([1, 2]));
    assert_eq!(run(&["zerosum", "c22", &cov, "--m", "6"]).0, 2);
}

#[test]
fn group_commands() {
    let (code, r) = run(&["olson", "--group", "3:1", "--elements", &data("z3_seq.elements"), "--target", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["count"], 3);
    assert_eq!(run(&["olson", "--group", "2:1,1", "--elements", &data("z2sq.elements"), "--target", "0,0"]).0, 0);
    assert_eq!(run(&["olson", "--group", "cyclic:6", "--elements", &data("z3_seq.elements"), "--target", "0"]).0, 2);
    let (code, r) = run(&["constants", "egz", "--group", "2:1,2"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["value"], 9);
    assert_eq!(run(&["constants", "davenport", "--group", "3:1,1"]).1["witnesses"]["value"], 5);
    assert_eq!(run(&["constants", "davenport", "--group", "2:4"]).0, 3);
    assert_eq!(run(&["constants", "egz", "--group", "2:bad"]).0, 2);
}

#[test]
fn characterization_commands() {
    let choi = data("choi.cov");
    assert_eq!(run(&["char", "t41", &choi, "--m", "2"]).0, 0);
    assert_eq!(run(&["char", "t41", &choi, "--m", "3"]).0, 2);
    let (code, r) = run(&["char", "t41", &choi, "--m", "3", "--converse"]);
    assert_eq!(code, 1);
    assert!(r["witnesses"]["failing"].is_object());
    let (code, r) = run(&["char", "psi", &data("two_halves.cov"), "--theta", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["is_zero"], true);
    assert_eq!(run(&["char", "psi", &choi, "--theta", "3/2"]).0, 2);
}

#[test]
fn graph_commands() {
    let (code, r) = run(&["graph", "regular", &data("k5_plus.graph"), "--q", "3"]);
    assert_eq!(code, 0);
    assert!(r["witnesses"]["degrees"].as_array().unwrap().iter().all(|d| d[1] == 3));
    let tri = data("triangle_plus.graph");
    let (code, r) = run(&["graph", "regular", &tri, "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["edges"], serde_json::json!([1, 2, 3]));
    assert_eq!(run(&["graph", "regular", &tri, "--q", "2", "--cover", &data("weighted4.cov"), "--h", "0"]).0, 0);
    assert_eq!(run(&["graph", "regular", &tri, "--q", "2", "--cover", &data("choi.cov"), "--h", "0"]).0, 2);
    assert_eq!(run(&["graph", "regular", &tri, "--q", "6"]).0, 2);

    let text = std::fs::read_to_string(data("k5_plus.graph")).unwrap();
    let g = Multigraph::parse(&text).unwrap();
    assert_eq!(Multigraph::parse(&g.serialize()).unwrap(), g);
}

#[test]
fn congruence_and_scan() {
    let (code, r) = run(&["congruence", "lemma42", "--p", "2", "--h", "2", "--from", "-50", "--to", "50"]);
    assert_eq!(code, 0);
    assert_eq!(r["witnesses"]["checked"], 101);
    assert_eq!(run(&["congruence", "lemma42", "--p", "4", "--h", "1", "--from", "0", "--to", "5"]).0, 2);
    for kind in ["conj21i", "conj21ii", "rem21a", "rem22"] {
        let (code, r) = run(&["scan", "--kind", kind, "--budget", "10", "--seed", "1"]);
        assert_eq!(code, 0, "{kind}");
        assert_eq!(r["witnesses"]["searched"], 10);
    }
    assert_eq!(run(&["scan", "--kind", "nope", "--budget", "1"]).0, 2);
}

#[test]
fn reports_share_one_schema() {
    let runs = [
        run(&["cover", "check", &data("choi.cov"), "--exact", "2"]).1,
        run(&["cover", "check", "/nonexistent.cov"]).1,
        run(&["constants", "davenport", "--group", "2:4"]).1,
        run(&["scan", "--kind", "rem21a", "--budget", "3"]).1,
    ];
    let first = keys(&runs[0]);
    for r in &runs {
        assert_eq!(keys(r), first);
    }
    assert_eq!(runs[1]["verdict"], "input-error");
    assert_eq!(runs[2]["verdict"], "resource-error");
    assert!(runs[0]["inputs"].as_object().unwrap().values().all(|d| d.as_str().unwrap().len() == 64));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["--json", "scan", "--kind", "conj21ii", "--budget", "15", "--seed", "77", "--threads", "4"];
    let a = Command::new(env!("CARGO_BIN_EXE_zerocover")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_zerocover")).args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}
