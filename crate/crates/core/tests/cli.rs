use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shellable"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data"))
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn complex_commands() {
    let v = json(&["complex", "shellable", "bowtie.json"]);
    assert_eq!(v["shellable"], false);
    let v = json(&["complex", "pure", "bowtie.json"]);
    assert_eq!(v["pure"], true);
    assert_eq!(v["dim"], 2);
}

#[test]
fn constraints_are_parsed() {
    let v = json(&["complex", "shellable", "fan.json", "--constraint", "fixed-minimum:a,c,d"]);
    assert_eq!(v["certificate"][0], serde_json::json!(["a", "c", "d"]));
    let v = json(&["complex", "shellable", "fan.json", "--constraint", "first-block:a,d,e/a,c,d"]);
    assert_eq!(v["certificate"][2], serde_json::json!(["a", "b", "c"]));
    let v = json(&["complex", "shellable", "fan.json", "--constraint", "size-nonincreasing"]);
    assert_eq!(v["shellable"], true);
    assert_eq!(run(&["complex", "shellable", "fan.json", "--constraint", "sideways"]).status.code(), Some(3));
}

#[test]
fn polyjoin_commands() {
    let v = json(&["polyjoin", "build", "two_triangles_family.json", "--oracle"]);
    assert_eq!(v["oracle_agrees"], true);
    assert!(v["complex"]["facets"].as_array().unwrap().len() > 1);
    let v = json(&["polyjoin", "build", "edge_over_empty_family.json"]);
    assert_eq!(v["complex"]["facets"].as_array().unwrap().len(), 2);
    let v = json(&["polyjoin", "pure", "edge_over_empty_family.json"]);
    assert_eq!(v["pure"], true);
    assert_eq!(v["criterion"], true);
}

#[test]
fn graph_commands() {
    let v = json(&["graph", "indcomplex", "c5.json"]);
    assert_eq!(v["complex"]["facets"].as_array().unwrap().len(), 5);
    assert_eq!(v["well_covered"], true);
    let v = json(&["graph", "product", "k2.json", "c5.json", "--u", "a,c"]);
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 10);
    // two copies of C5 plus the 2×2 cross edges
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 14);
    let v = json(&["graph", "condition", "c5.json", "--v0", "a"]);
    assert_eq!(v["holds"], true);
}

#[test]
fn verify_commands() {
    let v = json(&["verify", "theorem", "cor-4.10", "--instance", "edge_over_empty_family.json"]);
    assert_eq!(v["hypothesis"], true);
    assert_eq!(v["conclusion"], true);
    let v = json(&["verify", "theorem", "dimension-gap", "--instance", "edge_over_empty_family.json"]);
    assert_eq!(v["theorem"], "cor-4.10");
    let v = json(&["verify", "campaign", "lemma-2.3", "--trials", "100", "--seed", "42"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["trials"], 100);
    let v = json(&["verify", "fixture", "remark-4.8"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn pretty_output_is_a_table() {
    let out = run(&["--pretty", "verify", "fixture", "remark-4.9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("remark-4.9\n") && text.contains("pass"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["complex", "shellable", "fan.json", "--max-facets", "2"]), Some(2));
    assert_eq!(code(&["complex", "pure", "missing.json"]), Some(3));
    assert_eq!(code(&["complex", "pure", "c5.json"]), Some(3));
    assert_eq!(code(&["verify", "fixture", "nope"]), Some(3));
    assert_eq!(code(&["verify", "theorem", "nope", "--instance", "bowtie.json"]), Some(3));
    assert_eq!(code(&["frobnicate"]), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "campaign", "thm-4.11", "--trials", "150", "--seed", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
