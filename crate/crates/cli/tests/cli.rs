use std::process::Command;

use serde_json::Value;
use yqchar_cli::{dispatch, Dispatch, SCHEMA_VERSION};

fn run(args: &str) -> Dispatch {
    dispatch(std::iter::once("yqchar").chain(args.split_whitespace()))
}

fn json(args: &str) -> (i32, Value) {
    let out = run(args);
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, v)
}

#[test]
fn vector_module_of_sl3() {
    let (code, v) = json("qchar kr --type A2 --node 1 --k 1 --x 0 --height 3");
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["command"], "qchar kr");
    let lweights: Vec<&str> = v["character"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["lweight"].as_str().unwrap())
        .collect();
    assert_eq!(
        lweights,
        [
            "Psi[1,1]/Psi[1,0]",
            "Psi[1,-1] Psi[2,1/2]/Psi[1,0]/Psi[2,-1/2]",
            "Psi[2,-3/2]/Psi[2,-1/2]",
        ]
    );
}

#[test]
fn sl2_tsystem_passes() {
    let (code, v) = json("verify tsystem --type A1 --node 1 --k 1 --t 0");
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["command"], "verify tsystem");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        "qchar kr --type Z9 --node 1 --k 1",
        "qchar kr --type A2 --node 3 --k 1",
        "qchar kr --type A2 --node 1",
        "qchar kr --type A2 --node 1 --k -1",
        "qchar kr --type D3 --node 1 --k 1",
        "qchar wrong --type A2 --node 1",
        "verify tsystem --type A1 --node 1 --k 1 --bogus",
        "qchar kr --type A2 --node 1 --k 1 --x Psi[",
        "rep-check relations --k 1 --dim 2",
    ] {
        let out = run(args);
        assert_eq!(out.code, 2, "{args}: {}", out.stderr);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_failure_exits_three() {
    let dir = std::env::temp_dir().join(format!("yqchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("tight.json");
    std::fs::write(&cfg, r#"{"term_budget": 10, "output_format": "text"}"#).unwrap();
    let out = run(&format!("qchar kr --type G2 --node 2 --k 2 --config {}", cfg.display()));
    assert_eq!(out.code, 3, "{}", out.stderr);
    std::fs::write(&cfg, r#"{"term_budget": 0}"#).unwrap();
    let out = run(&format!("qchar kr --type A1 --node 1 --k 1 --config {}", cfg.display()));
    assert_eq!(out.code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_selects_text_format() {
    let dir = std::env::temp_dir().join(format!("yqchar-fmt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("text.json");
    std::fs::write(&cfg, r#"{"output_format": "text"}"#).unwrap();
    let out = run(&format!("qchar kr --type A1 --node 1 --k 2 --config {}", cfg.display()));
    assert!(out.stdout.starts_with("top Psi[1,2]/Psi[1,0]"), "{}", out.stdout);
    let out = run(&format!("qchar kr --type A1 --node 1 --k 2 --format json --config {}", cfg.display()));
    assert!(out.stdout.starts_with('{'));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = "verify tq --type A2 --node 1 --height 2 --k 6";
    let first = run(args);
    assert_eq!(first.code, 0);
    for _ in 0..3 {
        assert_eq!(run(args), first);
    }
}

#[test]
fn every_family_has_json() {
    for args in [
        "qchar demazure --type A2 --node 2 --k 2 --t 1",
        "qchar asymptotic --type B2 --node 2 --x 0 --y y",
        "qchar prefundamental --type A2 --node 1 --sign plus",
        "qchar prefundamental --type A2 --node 1 --sign minus --height 2",
        "qchar m --type A2 --node 1 --k 6 --height 2",
        "qchar n --type B2 --node 2 --k 6 --height 2",
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args}");
        assert_eq!(v["schema_version"], SCHEMA_VERSION, "{args}");
        assert!(v["character"]["terms"].as_array().is_some_and(|t| !t.is_empty()), "{args}");
    }
}

#[test]
fn verifiers_through_cli() {
    for args in [
        "verify tq --type A1 --node 1 --height 3",
        "verify two-term --type A1 --node 1 --height 3",
        "verify factorization --type B2 --node 1 --height 2",
        "verify kr-skeleton --type G2 --node 1 --k 2",
        "verify demazure-support --type B2 --node 1 --k 2",
        "verify m-support --type A2 --node 1 --height 2",
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args}: {v}");
        assert_eq!(v["pass"], true, "{args}");
    }
}

#[test]
fn rep_checks() {
    let (code, v) = json("rep-check relations --k 3 --x 5/7 --modes 3");
    assert_eq!(code, 0);
    assert_eq!(v["report"]["checked_basis"], 4);
    let (code, v) = json("rep-check relations --k -5/2 --dim 8 --x 1/3 --dump");
    assert_eq!(code, 0);
    assert_eq!(v["matrices"]["xi"].as_array().unwrap().len(), 8);
    let (code, v) = json("rep-check qchar --k 2 --x 1/2");
    assert_eq!(code, 0);
    assert_eq!(v["character"]["terms"].as_array().unwrap().len(), 3);
    let (code, v) = json("rep-check three-term --x 0 --y 1/2 --height 3");
    assert_eq!(code, 0);
    assert_eq!(v["matches_symbolic"], true);
}

#[test]
fn translation() {
    let (code, v) = json("translate --to multiplicative --type A2 --node 1");
    assert_eq!(code, 0);
    assert_eq!(v["translated_display"], v["quantum_display"]);
}

#[test]
fn suite_reports_in_spec_order() {
    let dir = std::env::temp_dir().join(format!("yqchar-suite-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("suite.json");
    std::fs::write(
        &file,
        r#"[
            {"kind": "tsystem", "type": "A2", "node": 2, "k": 2, "t": 1},
            {"kind": "kr_skeleton", "type": "B2", "node": 1, "k": 3},
            {"kind": "tq", "type": "A1", "node": 1, "ks": [6]}
        ]"#,
    )
    .unwrap();
    let (code, v) = json(&format!("verify suite --file {}", file.display()));
    assert_eq!(code, 0);
    let idx: Vec<u64> = v["entries"].as_array().unwrap().iter().map(|e| e["index"].as_u64().unwrap()).collect();
    assert_eq!(idx, [0, 1, 2]);
    std::fs::write(&file, r#"[{"kind": "tsystem", "type": "A2", "node": 7, "k": 1}]"#).unwrap();
    let (code, v) = json(&format!("verify suite --file {}", file.display()));
    assert_eq!(code, 1);
    assert!(v["entries"][0]["error"].is_string());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_yqchar");
    let ok = Command::new(bin)
        .args(["verify", "tsystem", "--type", "A1", "--node", "1", "--k", "1", "--t", "0"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["qchar", "kr", "--type", "Z9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("rep-check"));
}
