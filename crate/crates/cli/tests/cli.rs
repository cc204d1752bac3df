use std::process::{Command, Output};

use serde_json::Value;

fn arrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = arrlab(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn roots_g2() {
    let (code, v) = json(&["roots", "--type", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(v["roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
}

#[test]
fn roots_b3_orbit_sizes() {
    let (_, v) = json(&["roots", "--type", "B", "--rank", "3"]);
    let sizes: Vec<usize> = v["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o.as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, [3, 6]);
}

#[test]
fn roots_h3_is_rejected() {
    let out = arrlab(&["roots", "--type", "H3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unsupported"));
}

#[test]
fn verify_g2_chambers_block() {
    let (code, v) = json(&["verify", "--type", "G2", "--a", "1,0", "--b", "1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    let ch = &v["instances"][0]["chambers"];
    assert_eq!(ch["mobius"], 48);
    assert_eq!(ch["oracle"], 48);
    assert_eq!(ch["product"], 48);
    assert_eq!(ch["printed"], 35);
}

#[test]
fn verify_a2_shi() {
    let (code, v) = json(&["verify", "--type", "A2", "--a", "0", "--b", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["instances"][0]["predicted_exponents"], serde_json::json!([1, 3, 3]));
    let checks = v["instances"][0]["checks"].as_array().unwrap();
    let mut names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let n = names.len();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), n, "every check appears once");
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_rejects_non_shi_catalan() {
    let out = arrlab(&["verify", "--type", "A2", "--a", "2", "--b", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("a−b = 2 ∉ {−1,0}"));
}

#[test]
fn verify_grid_is_ordered() {
    let (code, v) = json(&["verify", "--type", "A2", "--grid", "2"]);
    assert_eq!(code, 0);
    let keys: Vec<(u64, u64)> = v["instances"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| (i["b"][0].as_u64().unwrap(), i["a"][0].as_u64().unwrap()))
        .collect();
    assert_eq!(keys, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]);
}

#[test]
fn bad_flag_is_input_error() {
    assert_eq!(arrlab(&["verify", "--type", "A2", "--a", "x", "--b", "0"]).status.code(), Some(2));
    assert_eq!(arrlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn table_g_i() {
    let (code, v) = json(&["table", "--case", "G-i", "--s", "1", "--t", "1"]);
    assert_eq!(code, 0);
    let rows = v["table"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(v["table"]["first_mismatch"].is_null());
}

#[test]
fn table_g_ii() {
    let (code, v) = json(&["table", "--case", "G-ii", "--s", "1", "--t", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["table"]["rows"].as_array().unwrap().len(), 6);
    let first = &v["table"]["rows"][0];
    assert_eq!(first["computed_count"], 6);
    assert_eq!(first["computed_exponents"], serde_json::json!([1, 5, 5]));
}

#[test]
fn table_b2() {
    let (code, v) = json(&["table", "--case", "B", "--s", "0", "--t", "1"]);
    assert_eq!(code, 0);
    let rows = v["table"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| !r["computed_exponents"].is_null()));
}

#[test]
fn table_unknown_case() {
    assert_eq!(arrlab(&["table", "--case", "G-v"]).status.code(), Some(2));
}

#[test]
fn certify_g_iv() {
    let (code, v) = json(&["certify", "--case", "G-iv", "--s", "1", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["final_exponents"], serde_json::json!([1, 9, 9]));
    assert_eq!(v["steps"].as_array().unwrap().len(), 9);
}

#[test]
fn multi_exp_a2_double() {
    let (code, v) = json(&["multi-exp", "--lines", "1,0;0,1;1,-1", "--mults", "2,2,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["exponents"], serde_json::json!([3, 3]));
}

#[test]
fn chambers_from_input_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let out = arrlab(&["build", "--type", "B2", "--a", "0,0", "--b", "1,1", "--json"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let (code, v) = json(&["chambers", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["hyperplanes"], 8);
    assert_eq!(v["mobius"], v["oracle"]);
    assert_eq!(v["mobius"], 25);
}

#[test]
fn flat_budget_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(["chambers", "--type", "B3", "--a", "0,0", "--b", "1,1"])
        .env("ARRLAB_FLAT_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn svg_g2_catalan() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.svg");
    let out = arrlab(&["svg", "--type", "G2", "--a", "1,1", "--b", "1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<line").count(), 18);
    let (_, v) = json(&["chambers", "--type", "G2", "--a", "1,1", "--b", "1,1"]);
    assert!(svg.contains(&format!("chambers: {}", v["mobius"])));
}

#[test]
fn svg_rank_three_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b3.svg");
    let out = arrlab(&["svg", "--type", "B3", "--a", "0,0", "--b", "0,0", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["verify", "--type", "B2", "--grid", "1", "--json"][..],
        &["table", "--case", "G-ii", "--s", "2", "--t", "1"][..],
        &["certify", "--type", "A2", "--a", "1", "--b", "2"][..],
    ] {
        let a = arrlab(args);
        let b = arrlab(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}
