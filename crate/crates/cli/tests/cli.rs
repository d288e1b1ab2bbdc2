//! Runs the `df` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn df(tables: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_df"))
        .args(args)
        .env("DF_TABLES_DIR", tables)
        .output()
        .expect("df runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn prime_count_and_huge_eta() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&df(dir.path(), &["pi", "--x", "1000000", "--method", "table"])), "78498\n");
    assert_eq!(stdout(&df(dir.path(), &["pi", "--x", "1000", "--method", "eta"])), "168\n");
    assert_eq!(stdout(&df(dir.path(), &["eta", "--factored", "2^1000,5^1000"])), "4005\n");
}

#[test]
fn search_json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&df(dir.path(), &["search", "2069", "--json"]));
    let v: Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut want = vec!["id", "domain", "possible", "analyzed", "count", "solutions", "elapsed_ms"];
    want.sort();
    let mut keys = keys;
    keys.sort();
    assert_eq!(keys, want);
    assert_eq!(v["id"], "2069");
    assert_eq!(v["count"], 36);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 36);
    assert_eq!(v["possible"], 1440);
    // The tables were cached under DF_TABLES_DIR.
    assert!(dir.path().join("eta.prn").exists());
    assert!(dir.path().join("manifest.json").exists());
}

#[test]
fn search_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&df(
        dir.path(),
        &["search", "2079", "--param", "y=2", "--domain", "x=1..100", "--json"],
    ));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["domain"], "m=1..10;n=1..10;x=1..100");
    let bad = df(dir.path(), &["search", "2172k0", "--param", "k=1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(df(dir.path(), &["bogus"]).status.code(), Some(1));
    assert_eq!(df(dir.path(), &["search", "9999"]).status.code(), Some(1));
    assert_eq!(df(dir.path(), &["eta", "--factored", "4^2"]).status.code(), Some(1));
    let missing = dir.path().join("missing.prn");
    let o = df(dir.path(), &["tables", "verify", missing.to_str().unwrap(), "--fn", "eta"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.prn"));
    assert_eq!(df(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn table_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sigma0.prn");
    let f = file.to_str().unwrap();
    stdout(&df(dir.path(), &["tables", "gen", "--fn", "sigma0", "--limit", "12", "--out", f]));
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text, "1\n2\n2\n3\n2\n4\n2\n4\n3\n4\n2\n6\n");
    assert!(stdout(&df(dir.path(), &["tables", "verify", f, "--fn", "sigma0"])).starts_with("ok"));
    // Read as φ, the file fails the anchor check since σ0(6) = 4 but φ(6) = 2.
    assert_eq!(df(dir.path(), &["tables", "verify", f, "--fn", "phi"]).status.code(), Some(1));
}

#[test]
fn solvers() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv");
    std::fs::write(&csv, "1,1,3\n1,-1,1\n").unwrap();
    let out = stdout(&df(dir.path(), &["solve", "linsys", "--file", csv.to_str().unwrap()]));
    assert_eq!(out, "x1 = 2\nx2 = 1\n");
    let out = stdout(&df(dir.path(), &["solve", "poly", "--coeffs", "1469,-490,29", "--mode", "integer"]));
    assert_eq!(out, "13\n");
    let out = stdout(&df(dir.path(), &["solve", "quad", "2", "3", "1", "--terms", "2"]));
    assert!(out.ends_with("0 1 1\n1 11 9\n2 109 89\n"));
    let out = stdout(&df(dir.path(), &["aux", "erdos-straus", "5"]));
    assert_eq!(out, "2 4 20\n2 5 10\n");
}
