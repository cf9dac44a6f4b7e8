use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cevian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cevian")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn centroid_report_matches_golden() {
    let out = cevian(&["construct", "--input", &fixture("centroid.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let golden =
        std::fs::read_to_string(format!("{}/tests/golden/centroid_report.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn centroid_collapses_q_o_h() {
    let out = cevian(&["construct", "--input", &fixture("centroid.json")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for k in ["Q", "O", "H"] {
        assert_eq!(v["points"][k]["bary"], serde_json::json!(["1", "1", "1"]), "{k}");
    }
    // xy + yz + zx
    assert_eq!(
        v["conics"]["circumconic_O"]["matrix"],
        serde_json::json!([["0", "1", "1"], ["1", "0", "1"], ["1", "1", "0"]])
    );
}

#[test]
fn gergonne_report_and_figure() {
    let report = scratch("gergonne.json");
    let svg = scratch("gergonne.svg");
    let args = [
        "construct",
        "--input",
        &fixture("gergonne.json"),
        "--output",
        report.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ];
    assert_eq!(cevian(&args).status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["points"]["Q"]["cartesian"], serde_json::json!(["1", "1"]));
    assert_eq!(v["guards"]["H_is_vertex"], serde_json::json!(true));
    let first = std::fs::read_to_string(&svg).unwrap();
    assert!(first.contains("version=\"1.1\""));
    assert_eq!(cevian(&args).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&svg).unwrap(), first);
}

#[test]
fn malformed_rational_exits_2() {
    let out = cevian(&["construct", "--input", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3/0"));
}

#[test]
fn guard_errors_name_the_guard() {
    let out = cevian(&["check", "--input", &fixture("on_side.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("on_side"), "{}", stderr(&out));
}

#[test]
fn missing_input_exits_2() {
    let out = cevian(&["check", "--input", &fixture("no_such_file.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generic_config_checks_clean() {
    for f in ["generic.json", "barycentric.json", "centroid.json"] {
        let out = cevian(&["check", "--input", &fixture(f)]);
        assert_eq!(out.status.code(), Some(0), "{f}: {}", stdout(&out));
        assert!(stdout(&out).contains(" 0 failed"));
    }
}

#[test]
fn tcc_on_h_vertex_is_skipped() {
    let out = cevian(&["check", "--input", &fixture("gergonne.json"), "--theorems", "thm_tcc"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("SKIP thm_tcc (H_not_vertex)"), "{}", stdout(&out));
}

#[test]
fn check_report_records_witnesses() {
    let report = scratch("perturbed.json");
    let out = cevian(&[
        "check",
        "--input",
        &fixture("perturbed_h.json"),
        "--theorems",
        "prop_gammaH",
        "--output",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let c = &v["checks"][0];
    assert_eq!(c["id"], "prop_gammaH");
    assert_eq!(c["status"], "fail");
    assert!(c["witness"]["config"].as_str().unwrap().contains("[H perturbed]"));
}

#[test]
fn unknown_filter_exits_2() {
    let out = cevian(&["check", "--input", &fixture("generic.json"), "--theorems", "nothing_*"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fuzz_count_is_capped() {
    let out = cevian(&["fuzz", "--count", "1000000000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("100000"));
    assert_eq!(cevian(&["fuzz", "--count", "0"]).status.code(), Some(2));
}

#[test]
fn fuzz_report_shape() {
    let out = cevian(&["fuzz", "--seed", "4", "--count", "3", "--theorems", "prop_*,thm_concurrence"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "cevian-fuzz/1");
    assert_eq!(v["configs"].as_array().unwrap().len(), 3);
    assert!(v["summary"]["thm_concurrence"]["pass"].as_u64().unwrap() == 3);
    assert_eq!(v["total"]["fail"], 0);
}
