//! End-to-end runs of the `focal` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn focal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_focal"))
        .args(args)
        .output()
        .expect("spawn focal")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn corpus_s3_standard() {
    let out = focal(&["corpus", "s3_standard", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let item = &v["items"][0];
    assert_eq!(item["pass"], true);
    assert_eq!(item["tower"]["levels"][0]["group_order"], 2);
    assert_eq!(item["tower"]["depth"], 3);
}

#[test]
fn hyper_on_fragment_file() {
    let out = focal(&["hyper", &data("a4_fragment.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["flags"]["associative"], false);
    assert_eq!(v["flags"]["reproducible"], false);
    assert_eq!(v["associativity_witness"], serde_json::json!(["P", "P2", "X"]));
}

#[test]
fn fragment_file_matches_generated_table() {
    let text = std::fs::read_to_string(data("a4_fragment.json")).unwrap();
    let doc = focal::document::ProblemDocument::parse_str(&text).unwrap();
    let generated = focal::reptools::a4::fragment_table().unwrap();
    assert_eq!(doc, focal::document::ProblemDocument::from_table(&generated));
}

#[test]
fn dependent_atoms_fail_verification() {
    let out = focal(&["verify", &data("dependent_atoms.json"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "NotIndependent");
    assert_eq!(v["error"]["witness"], serde_json::json!(["X", "X_again"]));
}

#[test]
fn data_files_condense() {
    let s3 = json(&focal(&["condense", &data("s3_standard.json"), "--json"]));
    assert_eq!(s3["monoid"]["size"], 2);
    assert_eq!(s3["focal_dim"], 2);
    let z3 = json(&focal(&["condense", &data("cyclic_cube_roots.json"), "--json"]));
    assert_eq!(z3["monoid"]["exponent"], 3);
    assert_eq!(z3["monoid"]["is_group"], true);
}

#[test]
fn invalid_documents_exit_2_with_pointer() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"algebra": {"preset": "matrix", "n": 2}, "atoms": [{"name": "k", "basis": [["1", "0", "0", "x"]]}]}"#,
    )
    .unwrap();
    let out = focal(&["verify", bad.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["pointer"], "/atoms/0/basis/0/3");

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{ not json").unwrap();
    assert_eq!(focal(&["table", broken.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(focal(&["table", "not_a_corpus_item"]).status.code(), Some(2));
    assert_eq!(focal(&["explode"]).status.code(), Some(2));
    assert_eq!(
        focal(&["tower", "s3_standard", "--max-depth", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn reports_are_byte_identical_and_echo_round_trips() {
    let a = focal(&["condense", &data("s3_standard.json"), "--json"]);
    let b = focal(&["condense", &data("s3_standard.json"), "--json", "--threads", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let original =
        focal::document::ProblemDocument::parse_str(&std::fs::read_to_string(data("s3_standard.json")).unwrap())
            .unwrap();
    let echo = focal::document::ProblemDocument::from_value(&v["problem"]).unwrap();
    assert_eq!(echo, original);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = focal(&["table", "quotient_t2_minus_1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.contains("table.entries.X,X: [k]\n"), "{text}");
}

#[test]
fn structural_failures_exit_1() {
    // t² gives X∘X = ∅, so there is no condensation.
    let out = focal(&["condense", "quotient_t2", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["flags"]["entire"], false);
    // hyper still reports on it.
    assert_eq!(focal(&["hyper", "quotient_t2"]).status.code(), Some(0));
}

#[test]
fn a4_checks_and_whole_corpus_pass() {
    let out = focal(&["a4-checks", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"].as_array().unwrap().len(), 7);
    let all = focal(&["corpus", "--json"]);
    assert_eq!(all.status.code(), Some(0), "{}", String::from_utf8_lossy(&all.stdout));
}

#[test]
fn text_output_is_key_value() {
    let out = focal(&["tower", "galois_biquadratic", "--text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tower.sizes: [4, 1]\n"), "{text}");
    assert!(text.lines().all(|l| l.split_once(": ").is_some()));
}
