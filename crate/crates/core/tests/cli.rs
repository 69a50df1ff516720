use std::process::{Command, Output};

use quadrics::detscan::QuadricSystem;

fn quadrics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadrics"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn ci_reports_the_web_middle_row() {
    let out = quadrics(&["ci", "--ambient", "7", "--degrees", "2,2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["middle_row"]["entries"], serde_json::json!([1, 65, 65, 1]));
    assert_eq!(v["level"]["level"], 3);
}

#[test]
fn verify_web_odd_sweep() {
    let out = quadrics(&["verify", "web-odd", "--m-range", "3..12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 10);
    for r in reports {
        assert_eq!(r["pass"], true);
        assert!(r["m"].is_u64() && r["lhs"].is_object() && r["rhs"].is_object());
    }
    let table = quadrics(&["--format", "table", "verify", "web-odd", "--m-range", "3..12"]);
    assert_eq!(stdout(&table).lines().filter(|l| l.starts_with("PASS m=")).count(), 10);
}

#[test]
fn verify_all_passes() {
    let out = quadrics(&["verify", "all", "--m-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["level"]["skipped"].as_array().unwrap().len(), 6);
}

#[test]
fn other_commands() {
    let v = json(&quadrics(&["double-solid", "--m", "3"]));
    assert_eq!(v["betti_resolved"], serde_json::json!([1, 0, 85, 132, 85, 0, 1]));
    let v = json(&quadrics(&["decomp", "--n", "6", "--r", "3"]));
    assert_eq!(v["euler_total"], -104);
    assert_eq!(v["euler_witness"]["e_ic_m0"], 132);
    let v = json(&quadrics(&["strata", "--n", "6", "--r", "3"]));
    assert_eq!(v["discriminant"]["node_count"], 84);
    let v = json(&quadrics(&["double-solid", "--m", "3", "--defect", "2"]));
    assert_eq!(v["clemens"]["h12"], 67);
    assert!(v.get("betti_resolved").is_none());
}

#[test]
fn invalid_input_exits_2() {
    let out = quadrics(&["ci", "--ambient", "7", "--degrees", "2,2,2,2", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert!(out.stdout.is_empty());
    assert_eq!(quadrics(&["double-solid", "--m", "1"]).status.code(), Some(2));
    assert_eq!(
        quadrics(&["verify", "web-odd", "--m-range", "9..3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        quadrics(&["scan", "--input", "/nonexistent.json", "--prime", "101"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("web.json");
    let sys = QuadricSystem::random(4, 3, 77).unwrap();
    std::fs::write(&path, serde_json::to_string(&sys).unwrap()).unwrap();
    let p = path.to_str().unwrap();
    let a = quadrics(&["scan", "--input", p, "--prime", "31", "--threads", "1"]);
    let b = quadrics(&["scan", "--input", p, "--prime", "31", "--threads", "8"]);
    let c = quadrics(&["scan", "--input", p, "--prime", "31", "--threads", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    let v = json(&a);
    assert_eq!(v["prime"], 31);
    assert_eq!(v["det_degree"], 6);
    let multi = json(&quadrics(&["scan", "--input", p, "--prime", "31,37", "--threads", "2"]));
    assert_eq!(multi["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn scan_rejects_asymmetric_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"n":1,"r":1,"matrices":[[[1,0,0],[0,1,0],[0,0,1]],[[1,2,0],[0,1,0],[0,0,1]]]}"#,
    )
    .unwrap();
    let out = quadrics(&["scan", "--input", path.to_str().unwrap(), "--prime", "101"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("matrix 1") && err.contains("(0,1)"), "{err}");
}
