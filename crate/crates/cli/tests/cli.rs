use std::process::{Command, Output};

use serde_json::{json, Value};

fn metamorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metamorph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn baseconv_eager() {
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--mode", "eager", "--max-output", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,0,1 (terminated)\n");
}

#[test]
fn baseconv_empty_input() {
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", ""]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(terminated)\n");
}

#[test]
fn baseconv_exact_length_counts_as_terminated() {
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--max-output", "3"]);
    assert_eq!(stdout(&out), "1,0,1 (terminated)\n");
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--max-output", "2"]);
    assert_eq!(stdout(&out), "1,0 (truncated)\n");
}

#[test]
fn baseconv_flush_repeats() {
    let out = metamorph(&["baseconv", "--from", "3", "--to", "10", "--digits", "1", "--mode", "streaming-flush", "--max-output", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("3,3,3,3,3,3 (truncated)\n"));
}

#[test]
fn baseconv_streaming_ledger() {
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--mode", "streaming"]);
    assert_eq!(
        stdout(&out),
        "in:6 → out:[1,0]\nin:2 → out:[]\nin:5 → out:[1]\nend → out:[]\n1,0,1 (terminated)\n"
    );
    let ascii = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--mode", "streaming", "--ascii"]);
    assert!(stdout(&ascii).starts_with("in:6 -> out:[1,0]\n"));
}

#[test]
fn baseconv_json() {
    let out = metamorph(&["baseconv", "--from", "10", "--to", "2", "--digits", "6,2,5", "--mode", "streaming-flush", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["output"], json!([1, 0, 1]));
    assert_eq!(v["terminated"], json!(true));
    assert_eq!(v["mode"], json!("streaming-flush"));
    assert_eq!(v["ledger"][0], json!({"phase": "input", "digit": 6, "out": [1, 0]}));
    assert_eq!(v["ledger"][3], json!({"phase": "finish", "out": []}));
}

#[test]
fn baseconv_rejects_bad_input() {
    for args in [
        &["baseconv", "--from", "10", "--to", "2", "--digits", "6,12"][..],
        &["baseconv", "--from", "1", "--to", "2", "--digits", "0"],
        &["baseconv", "--from", "10", "--to", "2", "--digits", "6,,2"],
        &["baseconv", "--from", "10", "--to", "2", "--digits", "1", "--mode", "lazy"],
    ] {
        let out = metamorph(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn sort_variants() {
    let run = |alg: &str, values: &str| stdout(&metamorph(&["sort", "--values", values, "--algorithm", alg, "--prefix", "5"]));
    assert_eq!(run("jigsaw-h", "2,3,1"), "1,2,3,∞,∞ (truncated)\n");
    assert_eq!(run("jigsaw-v", "2,3,1"), "1,2,3,∞,∞ (truncated)\n");
    assert_eq!(run("jigsaw-general", "2,3,1"), "1,2,3 (ended)\n");
    assert_eq!(run("cbp", "2,3,1"), "1,2,3 (ended)\n");
    assert_eq!(run("jigsaw-general", ""), "(ended)\n");
    assert_eq!(run("cbp", "4,inf,0"), "0,4 (ended)\n");
}

#[test]
fn sort_ascii_and_json() {
    let out = metamorph(&["sort", "--values", "2,inf", "--algorithm", "jigsaw-h", "--prefix", "3", "--ascii"]);
    assert_eq!(stdout(&out), "2,inf,inf (truncated)\n");
    let v = json_of(&metamorph(&["sort", "--values", "2,3,1", "--algorithm", "jigsaw-general", "--json"]));
    assert_eq!(v, json!({"algorithm": "jigsaw-general", "input": [2, 3, 1], "output": [1, 2, 3], "ended": true}));
}

#[test]
fn sort_rejects_bad_values() {
    assert_eq!(metamorph(&["sort", "--values", "2,x"]).status.code(), Some(2));
    assert_eq!(metamorph(&["sort", "--values", "-1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = metamorph(&["verify", "--instance", "heapsort", "--condition", "jigsaw-infinite", "--max-len", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("holds"));

    let bad = metamorph(&["verify", "--instance", "baseconv", "--condition", "streaming", "--max-len", "4", "--coalgebra", "eager"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("counterexample"));

    let eq = metamorph(&["verify", "--condition", "equivalence", "--instance", "heapsort", "--max-len", "3"]);
    assert_eq!(eq.status.code(), Some(0));

    let unsupported = metamorph(&["verify", "--instance", "baseconv", "--condition", "jigsaw-infinite"]);
    assert_eq!(unsupported.status.code(), Some(2));
    let missing = metamorph(&["verify", "--instance", "heapsort"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_json_witness() {
    let out = metamorph(&[
        "verify", "--instance", "baseconv", "--condition", "streaming", "--max-len", "3", "--coalgebra", "eager", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let check = &v["checks"][0];
    assert_eq!(check["result"], json!("counterexample"));
    let w = &check["witness"];
    assert_eq!(w["condition"], json!("streaming-condition"));
    for key in ["v", "w_i", "w_o"] {
        let s = w["state"][key].as_str().unwrap();
        let (p, q) = s.split_once('/').unwrap();
        assert!(p.parse::<u64>().is_ok() && q.parse::<u64>().unwrap() > 0, "{s}");
    }
    assert_ne!(w["expected"]["elem"], w["actual"]["elem"]);
}

#[test]
fn verify_holds_json_and_randomized_runs() {
    let args = ["verify", "--instance", "heapsort", "--condition", "jigsaw-general", "--seed", "9", "--draws", "300", "--json"];
    let first = metamorph(&args);
    assert_eq!(first.status.code(), Some(0));
    let v = json_of(&first);
    assert_eq!(v["checks"][0]["result"], json!("holds"));
    assert_eq!(v["plan"]["mode"]["seed"], json!(9));
    assert_eq!(metamorph(&args).stdout, first.stdout);

    let lemma = metamorph(&["verify", "--instance", "baseconv", "--condition", "streaming-lemma", "--max-len", "2"]);
    assert_eq!(lemma.status.code(), Some(0));
    let law = metamorph(&["verify", "--instance", "heapsort", "--condition", "fill-ih-index-law"]);
    assert_eq!(law.status.code(), Some(0));
}

#[test]
fn verify_budget_truncation_is_reported() {
    let out = metamorph(&["verify", "--instance", "heapsort", "--condition", "jigsaw-infinite", "--budget", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    // One case for straight-production, then the budgeted sweep.
    assert_eq!(v["checks"][0]["samples"], json!(11));
    assert_eq!(v["checks"][0]["truncated"], json!(true));
}

#[test]
fn trace_board_text() {
    let out = metamorph(&["trace-board", "--values", "2,3,1", "--rows", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let left: Vec<&str> = text
        .lines()
        .skip(1)
        .step_by(2)
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(left, ["1", "2", "3"]);
    let first_row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(first_row, ["1", "·", "1", "·", "1", "·", "∞"]);
}

#[test]
fn trace_board_empty_is_all_straight() {
    let out = metamorph(&["trace-board", "--values", "", "--rows", "2", "--ascii"]);
    let text = stdout(&out);
    let edges: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(edges, ["inf", "inf"]);
}

#[test]
fn trace_board_json() {
    let v = json_of(&metamorph(&["trace-board", "--values", "5", "--rows", "1", "--format", "json"]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(
        v["rows"][0]["pieces"][0],
        json!({"top": 5, "right": "inf", "left": 5, "bottom": "inf"})
    );
    assert_eq!(v["straight"], json!("inf"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--instance", "heapsort", "--condition", "streaming", "--seed", "1", "--json"];
    assert_eq!(metamorph(&args).stdout, metamorph(&args).stdout);
}

#[test]
fn eager_streaming_equivalence_fails_with_both_sides() {
    let out = metamorph(&[
        "verify", "--instance", "baseconv", "--condition", "equivalence", "--coalgebra", "eager", "--max-len", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_of(&out);
    let w = &v["checks"][0]["witness"];
    assert!(w["input"].is_array());
    for side in ["candidate", "reference"] {
        let prefix = &w[side]["prefix"];
        assert!(prefix["items"].is_array() && prefix["ended"].is_boolean(), "{side}");
    }
    assert_ne!(w["candidate"], w["reference"]);
}
