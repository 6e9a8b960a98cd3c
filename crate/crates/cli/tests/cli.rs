use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbrauer")).args(args).env_remove("QBRAUER_CACHE_DIR").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn verify_relations_small_ranks() {
    let v = json(&["verify-relations", "--n", "3"]);
    assert_eq!(v["result"]["dim"], 15);
    assert_eq!(v["ok"], true);
    assert_eq!(json(&["verify-relations", "--n", "2"])["result"]["dim"], 3);
}

#[test]
fn rank_above_maximum_is_a_usage_error() {
    assert_eq!(run(&["verify-relations", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "--n", "3", "--f", "2", "--lambda", "[]"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "--n", "3", "--f", "1", "--lambda", "[1]", "--z-exp", "1", "--numeric", "7,2,3"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "--n", "3", "--f", "1", "--lambda", "[1]", "--numeric", "7,1,3"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn gram_examples() {
    let v = json(&["gram", "--n", "2", "--f", "1", "--lambda", "[]"]);
    assert_eq!(v["result"]["det"], "(q*z - q*z^-1)/(q^2 - 1)");
    let v = json(&["gram", "--n", "3", "--f", "1", "--lambda", "[1]", "--z-exp", "1"]);
    assert_eq!(v["result"]["det_zero"], true);
    assert_eq!(v["config"]["spec"], "z=q^1");
    let v = json(&["gram", "--n", "3", "--f", "0", "--lambda", "[2,1]"]);
    assert_eq!(v["result"]["det_zero"], false);
}

#[test]
fn thin_wrappers() {
    assert_eq!(json(&["basis-count", "--n", "4"])["result"]["total"], 105);
    let v = json(&["jm-spectrum", "--n", "2", "--f", "1", "--lambda", "[]"]);
    assert_eq!(v["result"]["tableaux"][0]["eigenvalues"][1], "(-q + q^3*z^-2)/(q^2 - 1)");
    let v = json(&["scan", "--n", "3", "--from", "-4", "--to", "3"]);
    assert_eq!(v["result"]["zeros"], serde_json::json!([-2, 0, 1]));
    let v = json(&["branching", "--n", "4", "--f", "1", "--lambda", "[1,1]"]);
    assert_eq!(v["ok"], true);
    let v = json(&["semisimple", "--n", "3", "--numeric", "7,2,3"]);
    assert_eq!((v["result"]["e"].clone(), v["result"]["observed"].clone()), (3.into(), false.into()));
    let v = json(&["mul", "--n", "3", "--lhs", "E", "--rhs", "T2 E"]);
    assert_eq!(v["result"]["terms"][0]["coeff"], "z");
}

#[test]
fn reports_are_byte_identical() {
    let args = ["scan", "--n", "3", "--threads", "2"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let fresh = run(&["mul", "--n", "3", "--lhs", "T1 E", "--rhs", "T2", "--cache-dir", d]);
    assert!(fresh.status.success());
    assert!(dir.path().join("qbrauer-n3-v1.json").exists());
    let cached = run(&["mul", "--n", "3", "--lhs", "T1 E", "--rhs", "T2", "--cache-dir", d]);
    assert_eq!(fresh.stdout, cached.stdout);

    std::fs::write(dir.path().join("qbrauer-n3-v1.json"), "not a table").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qbrauer")).args(["verify-relations", "--n", "3"]).env("QBRAUER_CACHE_DIR", d).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cache"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let out = run(&["basis-count", "--n", "3", "--output", p.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!((v["format_version"].clone(), v["result"]["total"].clone()), (1.into(), 15.into()));
}
