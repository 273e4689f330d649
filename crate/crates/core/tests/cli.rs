use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use sha2::{Digest, Sha256};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn qposet(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qposet"))
        .args(args)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap();
    (out.status.code().unwrap(), text)
}

fn run(command: &str, input: &Path, extra: &[&str]) -> (i32, String) {
    let mut args = vec!["--command", command, "--input", input.to_str().unwrap()];
    args.extend_from_slice(extra);
    qposet(&args)
}

fn run_json(command: &str, input: &Path, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["--json"];
    args.extend_from_slice(extra);
    let (code, text) = run(command, input, &args);
    (
        code,
        serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}")),
    )
}

#[test]
fn reed_solomon_is_mds() {
    let (code, text) = run("mds-check", &data("rs2_gf4.json"), &[]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("MDS: true"), "{text}");
    assert!(text.contains("d_P: 2"), "{text}");
}

#[test]
fn cyclic_poset_is_an_input_error() {
    let (code, text) = run("enumerate-ideals", &data("cyclic.json"), &[]);
    assert_eq!(code, 2);
    assert!(text.contains("CycleDetected"), "{text}");
    assert!(text.contains("cyclic.json:2"), "{text}");
    assert!(text.contains("poset.covers"), "{text}");
}

#[test]
fn singleton_bound_on_the_pure_mds_fixture() {
    let (code, v) = run_json("verify-t1", &data("mds_312.json"), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["params"]["display"], "[[3, 2^1, 2]]_2");
    assert_eq!(v["result"]["bound_holds"], true);
    assert_eq!(v["result"]["equality"], true);
}

#[test]
fn impure_counterexample_fails_the_literal_bound() {
    let (code, v) = run_json("verify-t1", &data("impure.json"), &[]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "failed");
    assert_eq!(v["result"]["params"]["pure"], false);
    assert_eq!(v["result"]["dual_distance_bound_holds"], true);
    let (code, text) = run("verify-t3", &data("impure.json"), &[]);
    assert_eq!(code, 2, "{text}");
    assert!(text.contains("pure"), "{text}");
}

#[test]
fn simulation_agrees_with_params() {
    for cmd in ["simulate", "verify-t2"] {
        let (code, v) = run_json(cmd, &data("mds_312.json"), &[]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["dimQ"], 2);
        assert_eq!(v["result"]["minUndetectedWeight"], 2);
        assert_eq!(v["result"]["agree"], true);
    }
}

#[test]
fn construction_and_characterizations() {
    for cmd in [
        "construct-mds",
        "verify-t4",
        "verify-t3",
        "verify-t5",
        "params",
    ] {
        let (code, text) = run(cmd, &data("mds_312.json"), &[]);
        assert_eq!(code, 0, "{cmd}: {text}");
    }
}

#[test]
fn additive_code_commands() {
    let (code, v) = run_json("reduce", &data("additive_gf9.json"), &[]);
    assert_eq!(code, 0);
    let rrn: Vec<u64> = v["result"]["rrn"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(rrn.iter().sum::<u64>(), v["result"]["k"].as_u64().unwrap());
    let (code, v) = run_json("perfect-check", &data("additive_gf9.json"), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["agree"], true);
    let (code, v) = run_json("dual", &data("mds_312.json"), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["form"], "alt");
    assert_eq!(v["result"]["self_orthogonal"], true);
}

#[test]
fn figure_one_ideals_by_size() {
    let (code, v) = run_json("enumerate-ideals", &data("figure_one.json"), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["total"], 15);
    assert_eq!(
        v["result"]["by_size"]["6"],
        serde_json::json!([[1, 2, 3, 4, 5, 6], [1, 2, 3, 4, 5, 7]])
    );
}

#[test]
fn reports_are_deterministic_and_hash_their_inputs() {
    let path = data("mds_312.json");
    let (_, a) = run("params", &path, &["--json"]);
    let (_, b) = run("params", &path, &["--json"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let digest = hex::encode(Sha256::digest(std::fs::read(&path).unwrap()));
    assert_eq!(v["inputs"]["input"]["sha256"], digest);
    assert_eq!(v["caps"]["enumeration"], 1 << 24);
}

#[test]
fn poset_file_overrides_the_document() {
    let antichain = scratch("antichain3.json", r#"{"n": 3, "covers": []}"#);
    let (code, v) = run_json(
        "params",
        &data("mds_312.json"),
        &["--poset", antichain.to_str().unwrap()],
    );
    assert_eq!(code, 0);
    assert_eq!(v["result"]["poset"]["covers"], serde_json::json!([]));
    assert!(v["inputs"]["poset"]["sha256"].is_string());
}

#[test]
fn parse_errors_name_file_line_and_key() {
    let path = scratch("unknown_key.json", "{\n  \"code\": {\n    \"ambient\": {\"p\": 2, \"q\": 4},\n    \"n\": 1,\n    \"linearity\": \"full\"\n  }\n}\n");
    let (code, text) = run("params", &path, &[]);
    assert_eq!(code, 2);
    assert!(text.contains("unknown_key.json:3"), "{text}");
    assert!(text.contains("code.ambient"), "{text}");

    let path = scratch("bad_entry.json", "{\n  \"code\": {\n    \"ambient\": {\"p\": 3},\n    \"n\": 2,\n    \"linearity\": \"prime\",\n    \"generators\": [[1, 5]]\n  }\n}\n");
    let (code, text) = run("mds-check", &path, &[]);
    assert_eq!(code, 2);
    assert!(text.contains("code.generators[0][1]"), "{text}");
    assert!(text.contains("bad_entry.json:6"), "{text}");
}

#[test]
fn non_self_orthogonal_stabilizer_is_rejected() {
    let path = scratch(
        "not_so.json",
        r#"{"code": {"ambient": {"p": 2}, "n": 2, "linearity": "prime", "generators": [[1, 0], [0, 1]]}}"#,
    );
    let (code, text) = run("params", &path, &[]);
    assert_eq!(code, 2, "{text}");
}

#[test]
fn unknown_command_is_rejected() {
    let (code, text) = qposet(&["--command", "nope", "--input", "x.json"]);
    assert_eq!(code, 2);
    assert!(text.contains("unknown command"), "{text}");
}
