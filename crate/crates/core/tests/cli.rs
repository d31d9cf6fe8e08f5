use std::process::{Command, Output};

use serde_json::Value;

fn crystal_fold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystal-fold")).args(args).env_remove("CRYSTAL_FOLD_OUT").output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fold_prints_b3_for_the_flip_of_a5() {
    let out = crystal_fold(&["fold", "--quiver", "A5", "--auto", "1:5,2:4,3:3,4:2,5:1"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["matrix"], serde_json::json!([[2, -1, 0], [-1, 2, -1], [0, -2, 2]]));
    assert_eq!(doc["orbits"][0], serde_json::json!(["1", "5"]));
}

#[test]
fn rejected_input_is_a_json_error_with_status_2() {
    let out = crystal_fold(&["fold", "--quiver", "A2", "--auto", "1:2,2:1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "non_admissible");

    let out = crystal_fold(&["generate", "--type", "B2", "--weight", "1,-1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = crystal_fold(&["generate", "--type", "A2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let out = crystal_fold(&["--out", dir.path().to_str().unwrap(), "generate", "--type", "G2", "--weight", "0,1"]);
    assert!(out.status.success());
    let saved = std::fs::read(dir.path().join("crystal.json")).unwrap();
    assert_eq!(saved, out.stdout);
    let (g, folding) = crystal_fold::crystal::CrystalGraph::from_json(std::str::from_utf8(&saved).unwrap()).unwrap();
    assert_eq!(g.len(), 7);
    assert!(folding.is_none());
}

#[test]
fn fold_crystal_carries_the_folding_block() {
    let out = crystal_fold(&["fold-crystal", "--fold", "A3:Bn", "--weight", "spin"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(doc["folding"]["orbits"], serde_json::json!([["1", "3"], ["2"]]));
    assert!(doc["folding"]["sigma"].is_object());

    let dot = crystal_fold(&["fold-crystal", "--fold", "D4:G2", "--depth", "3", "--emit", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph crystal {"));
}

#[test]
fn verify_passes_for_the_spin_fold() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_crystal-fold"))
        .args(["verify", "--fold", "A7:Bn", "--weight", "spin", "--against", "direct"])
        .env("CRYSTAL_FOLD_OUT", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let doc = stdout_json(&out);
    assert_eq!(doc["passed"], true);
    let names: Vec<&str> = doc["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"spin_crystal_isomorphic") && names.contains(&"chevalley_relations"));
    assert!(dir.path().join("report.json").is_file());
}

#[test]
fn spin_outputs() {
    let out = crystal_fold(&["spin", "--n", "3", "--emit", "table"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 8);

    let out = crystal_fold(&["spin", "--n", "2", "--diagram", "2,1"]);
    let point = stdout_json(&out);
    assert_eq!(point["dims"], serde_json::json!({"1": 1, "2": 1, "3": 1}));
}
