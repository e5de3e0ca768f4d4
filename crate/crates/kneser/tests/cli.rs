//! End-to-end checks of the binary: exit codes, formats, and file I/O.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn kneser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kneser"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kneser-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("scratch dir");
    dir.join(name)
}

const SQUARE: &str = r#"{"dim": 2, "points": [[0, 0], [1, 0], [0, 1], [1, 1]]}"#;

#[test]
fn radon_splits_square_diagonals() {
    let path = scratch("square.json");
    fs::write(&path, SQUARE).unwrap();
    let out = kneser(&["radon", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["partition"]["positive"], serde_json::json!([1, 4]));
    assert_eq!(v["partition"]["negative"], serde_json::json!([2, 3]));
    assert_eq!(v["partition"]["coefficients"]["1"], "1/2");
    assert_eq!(v["radon_point"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["seed"], 0);
}

#[test]
fn check_exit_codes_track_verification() {
    let path = scratch("square2.json");
    fs::write(&path, SQUARE).unwrap();
    // a diagonal cuts every 2-set of the square
    let out = kneser(&["check", "--input", path.to_str().unwrap(), "--t", "1,4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verified = true"));
    // a side does not
    let out = kneser(&["check", "--input", path.to_str().unwrap(), "--t", "1,2", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("failing k-set"));
    // T larger than the dimension is an input error
    let out = kneser(&["check", "--input", path.to_str().unwrap(), "--t", "1,2,3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let path = scratch("bad.json");
    fs::write(&path, "{ nope").unwrap();
    let out = kneser(&["radon", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn gen_cyclic_round_trips_through_radon() {
    let path = scratch("curve.json");
    let out = kneser(&[
        "gen-cyclic",
        "--n",
        "4",
        "--d",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"16\""), "t = 4 squared");
    let out = kneser(&["radon", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // moment-curve points alternate along the parameter order
    assert_eq!(v["partition"]["positive"], serde_json::json!([2, 4]));
    assert_eq!(v["partition"]["negative"], serde_json::json!([1, 3]));
}

#[test]
fn gen_cyclic_rejects_unsorted_params() {
    let out = kneser(&["gen-cyclic", "--n", "3", "--d", "2", "--params", "2,1,3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kneser(&["gen-cyclic", "--n", "3", "--d", "3", "--params", "1/2,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1/8"));
}

#[test]
fn zeta_methods_and_errors() {
    for method in ["gap-optimizer", "sign-oracle", "both-agree"] {
        let out = kneser(&[
            "zeta", "--k", "3", "--d", "5", "--lambda", "2", "--method", method, "--format",
            "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "method {method}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["zeta"], 7);
        assert_eq!(v["witness_gaps"], serde_json::json!([1, 1, 1, 0, 0]));
        assert_eq!(v["z_lower"], 7);
        assert_eq!(v["z_upper"], 7);
        assert_eq!(v["method"], method);
    }
    // trivial range routes to the exact value
    let out = kneser(&["zeta", "--k", "4", "--d", "4", "--lambda", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["zeta"], 5);
    assert_eq!(v["method"], "trivial");
    // k below lambda+1 is an input error
    let out = kneser(&["zeta", "--k", "2", "--d", "5", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown method
    let out = kneser(&["zeta", "--k", "3", "--d", "5", "--lambda", "2", "--method", "guess"]);
    assert_eq!(out.status.code(), Some(2));
    // oracle cap below d+2 violates the run configuration
    let out = kneser(&[
        "zeta", "--k", "3", "--d", "5", "--lambda", "2", "--oracle-cap", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_has_symbol_headers_and_grid_limit() {
    let out = kneser(&["table", "--d", "4", "--k", "4", "--lambda", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let header = text.lines().next().unwrap();
    assert_eq!(header, "k,d,lambda,alpha,range,z,Z,zeta,m_star,citation,note");
    assert!(text.lines().any(|l| l.starts_with("4,4,2,1/2,non-trivial,7,7,7")));
    assert!(text.lines().any(|l| l.starts_with("2,2,2,1,trivial")));
    let out = kneser(&["table", "--d", "100", "--k", "100", "--lambda", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_exit_zero() {
    let out = kneser(&["verify", "parity", "--seed", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);
    let out = kneser(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}
