use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cvd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cvd")).args(args).env_remove("CVD_SEED").output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const P3: &str = "p cvd 3 2\nv 1 1\nv 2 1\nv 3 1\ne 1 2\ne 2 3\n";

#[test]
fn solve_json_and_text() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p3.cvd", P3);
    for algo in ["lr94", "p3sub", "naive3", "exact"] {
        let out = cvd(&["solve", "--algo", algo, "--input", &input, "--trace"]);
        assert!(out.status.success(), "{algo}: {}", String::from_utf8_lossy(&out.stderr));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["cost"], "1/1");
        assert_eq!(v["feasible"], true);
        assert_eq!(v["minimal"], true);
    }
    let out = cvd(&["solve", "--input", &input, "--output", "text"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("cost: 1/1"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.cvd", "p cvd 3 0\nv 1 1\nv 2 1\n");
    let out = cvd(&["solve", "--input", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 3 has no weight"));
    assert_eq!(cvd(&["solve", "--algo", "bogus", "--input", &bad]).status.code(), Some(1));
    assert_eq!(cvd(&["frobnicate"]).status.code(), Some(1));

    let input = write(dir.path(), "p3.cvd", P3);
    let empty = write(dir.path(), "empty.json", r#"{"vertices":[],"cost":"0/1","feasible":true,"minimal":true}"#);
    assert_eq!(cvd(&["verify", "--input", &input, "--solution", &empty]).status.code(), Some(2));
    let both = write(dir.path(), "both.json", r#"{"vertices":[1,2],"cost":"2/1","feasible":true,"minimal":true}"#);
    assert_eq!(cvd(&["verify", "--input", &input, "--solution", &both]).status.code(), Some(2));
    let good = write(dir.path(), "good.json", r#"{"vertices":[2],"cost":"1/1","feasible":true,"minimal":true}"#);
    assert_eq!(cvd(&["verify", "--input", &input, "--solution", &good]).status.code(), Some(0));
}

#[test]
fn solve_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.cvd");
    let out = cvd(&["gen", "--model", "gnp:12:0.4", "--seed", "3", "--max-weight", "9", "--out", input.to_str().unwrap()]);
    assert!(out.status.success());
    let out = cvd(&["solve", "--input", input.to_str().unwrap()]);
    let sol = write(dir.path(), "sol.json", &String::from_utf8_lossy(&out.stdout));
    assert_eq!(cvd(&["verify", "--input", input.to_str().unwrap(), "--solution", &sol]).status.code(), Some(0));
}

#[test]
fn gen_is_seeded() {
    let a = cvd(&["gen", "--model", "gnp:10:0.3", "--seed", "1"]);
    let b = cvd(&["gen", "--model", "gnp:10:0.3", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_cvd"))
        .args(["gen", "--model", "gnp:10:0.3"])
        .env("CVD_SEED", "1")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    let k3 = cvd(&["gen", "--model", "vc-pendant:planted:3:1:0"]);
    assert!(String::from_utf8_lossy(&k3.stdout).contains("p cvd 6 6"));
}

#[test]
fn bench_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..5 {
        let p = dir.path().join(format!("g{seed}.cvd"));
        cvd(&["gen", "--model", "gnp:8:0.4", "--seed", &seed.to_string(), "--out", p.to_str().unwrap()]);
    }
    let report = dir.path().join("report.json");
    let out = cvd(&["bench", "--corpus", dir.path().to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);

    let out = cvd(&["bench", "--corpus", dir.path().to_str().unwrap(), "--algos", "p3sub", "--oracle-max-n", "0"]);
    let csv = String::from_utf8_lossy(&out.stdout);
    assert!(csv.starts_with("instance,n,m,algorithm"));
    assert_eq!(csv.lines().count(), 6);
}
