use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cornerideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cornerideal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const EXAMPLE: &str = r#"{"m":4,"n":4,"minors":[[1,2,1,2],[2,3,1,3],[1,3,1,4],[3,4,1,2]]}"#;
const FULL_3X3: &str = r#"{"m":3,"n":3,"minors":[[1,2,1,2],[1,2,1,3],[1,3,1,2],[1,3,1,3]]}"#;
const FULL_2X4: &str = r#"{"m":2,"n":4,"minors":[[1,2,1,2],[1,2,1,3],[1,2,1,4]]}"#;

#[test]
fn malformed_file_exits_2() {
    let p = fixture("bad.json", "{bad");
    let o = run(&["analyze", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn missing_file_exits_2() {
    let o = run(&["analyze", "--input", "/nonexistent/collection.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_example_counts_intervals() {
    let p = fixture("example.json", EXAMPLE);
    let o = run(&["--format", "json", "analyze", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertical"].as_array().unwrap().len(), 5);
    assert_eq!(v["horizontal"].as_array().unwrap().len(), 4);
    assert_eq!(v["toric"].as_array().unwrap().len(), v["ideal"].as_array().unwrap().len() + 1);
}

#[test]
fn analyze_empty_collection() {
    let p = fixture("empty.json", r#"{"m":3,"n":3,"minors":[]}"#);
    let o = run(&["analyze", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("vertical intervals: 0"));
}

#[test]
fn radical_verdicts() {
    let p = fixture("full33.json", FULL_3X3);
    let o = run(&["radical", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("radical: no"));
    assert!(out.contains("witness cycle: H2 V2 H3 V3"));

    let p = fixture("full24.json", FULL_2X4);
    let o = run(&["radical", "--input", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "radical: yes\n");

    let p = fixture("single.json", r#"{"m":2,"n":2,"minors":[[1,2,1,2]]}"#);
    let o = run(&["radical", "--input", p.to_str().unwrap()]);
    assert_eq!(stdout(&o), "radical: yes\n");
}

#[test]
fn radical_rejects_non_corner_with_exit_4() {
    let p = fixture("shifted.json", r#"{"m":3,"n":3,"minors":[[2,3,1,2]]}"#);
    let o = run(&["radical", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn primes_full_3x3_components_contain_x11() {
    let p = fixture("full33p.json", FULL_3X3);
    let o = run(&["--format", "json", "primes", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.iter().filter(|c| c["variableFree"] == Value::Bool(true)).count(), 1);
    for c in comps.iter().filter(|c| c["variableFree"] == Value::Bool(false)) {
        assert!(c["w"].as_array().unwrap().iter().any(|x| x == "x[1,1]"));
    }
}

#[test]
fn hilbert_2x2_reports_both_sides() {
    let o = run(&["--format", "json", "hilbert", "--m", "2", "--n", "2"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lhs"], serde_json::json!([1, 0, -1]));
    assert!(v["holds"].is_boolean());
    assert_eq!(v["sequenceHolds"], true);
}

#[test]
fn betti_full_3x3_regularity_3() {
    let p = fixture("full33b.json", FULL_3X3);
    let o = run(&["betti", "--input", p.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("regularity: 3"));
}

#[test]
fn connect_single_minor_one_move() {
    let c = fixture("single_c.json", r#"{"m":2,"n":2,"minors":[[1,2,1,2]]}"#);
    let t = fixture("tables.json", r#"{"u":{"cells":[[1,1,1],[2,2,1]]},"v":{"cells":[[1,2,1],[2,1,1]]}}"#);
    let o = run(&["--format", "json", "connect", "--input", c.to_str().unwrap(), "--tables", t.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["fiber"]["witness"].as_array().unwrap().len(), 1);
}

#[test]
fn bfs_cap_gives_unknown_verdict() {
    let c = fixture("cap_c.json", FULL_3X3);
    let t = fixture(
        "cap_t.json",
        r#"{"u":{"cells":[[1,1,3],[2,2,3],[3,3,3]]},"v":{"cells":[[1,2,3],[2,3,3],[3,1,3]]}}"#,
    );
    let o = run(&["--cap-bfs", "1", "connect", "--input", c.to_str().unwrap(), "--tables", t.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verdict: unknown"));
}

#[test]
fn resource_caps_exit_3() {
    let p = fixture("caps.json", FULL_3X3);
    for flag in ["--cap-pairs", "--cap-memory", "--cap-degree"] {
        let o = run(&[flag, "1", "betti", "--input", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(3), "{flag}");
    }
}

#[test]
fn zero_cap_is_a_validation_error() {
    let p = fixture("zero.json", FULL_3X3);
    let o = run(&["--cap-degree", "0", "betti", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file_sets_caps() {
    let p = fixture("cfg_c.json", FULL_3X3);
    let cfg = fixture("cfg.json", r#"{"pairCap": 1}"#);
    let o = run(&["--config", cfg.to_str().unwrap(), "betti", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_output_round_trips() {
    let p = fixture("rt.json", EXAMPLE);
    for cmd in ["analyze", "primes", "betti"] {
        let o = run(&["--format", "json", cmd, "--input", p.to_str().unwrap()]);
        assert!(o.status.success(), "{cmd}");
        let text = stdout(&o);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{cmd}");
    }
}

#[test]
fn verify_selected_checks() {
    let o = run(&["verify", "--only", "1,10"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("PASS [ 1]"));
    assert!(out.contains("2/2 checks pass"));
}
