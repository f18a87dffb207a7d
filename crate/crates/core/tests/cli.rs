use std::process::Command;

use serde_json::Value;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_euler-partitions")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["map", "sylvester", "7,7,5,5,3,1"]).0, 0);
    assert_eq!(bin(&["map", "sylvester", "6,1"]).0, 3);
    assert_eq!(bin(&["verify", "eq1", "--max-n", "0"]).0, 2);
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn map_json_fields() {
    let (code, out, _) = bin(&["map", "sigma", "2,1", "--root", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["output"]["parts"], serde_json::json!([3]));
    assert_eq!(v["output"]["root_part"], 1);
    assert_eq!(v["output"]["root_size"], 1);
}

#[test]
fn sylvester_trace_shows_hooks() {
    let (code, out, _) = bin(&["map", "sylvester", "7,7,5,5,3,1", "--trace", "--diagram"]);
    assert_eq!(code, 0);
    assert!(out.contains("hook 1: cells=9 twos=7"));
    assert!(out.contains("hook 3: cells=2 twos=0"));
    assert!(out.contains("[2][2][2][1]"));
    assert!(out.ends_with("9,7,6,4,2\n"));
}

#[test]
fn verify_json_shape() {
    let (code, out, _) = bin(&["verify", "thm1", "eq1", "--max-n", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["identity"], "thm1");
    let row = &reports[0]["rows"][3];
    assert_eq!((row["n"].as_u64(), row["lhs"].as_str(), row["rhs"].as_str()), (Some(4), Some("12"), Some("12")));
    assert_eq!(reports[1]["method"], "series");
}

#[test]
fn enumerate_tsv_is_stable() {
    let a = bin(&["enumerate", "6", "rooted-odd", "--format", "tsv"]);
    let b = bin(&["enumerate", "6", "rooted-odd", "--format", "tsv"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 1 + 14);
}
