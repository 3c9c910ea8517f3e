//! End-to-end behavior of the `isogate` binary: reproducible reports, exit
//! codes and configuration errors.

use std::process::{Command, Output};

use serde_json::Value;

fn isogate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isogate")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn reports_are_byte_identical_across_runs_and_worker_counts() {
    let a = isogate(&["run", "--filter", "step9"]);
    let b = isogate(&["run", "--filter", "step9"]);
    let c = isogate(&["run", "--filter", "step9", "--workers", "1"]);
    assert!(a.status.success(), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn report_shape() {
    let o = isogate(&["run", "--filter", "step8"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(r["summary"]["total"], ids.len());
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c.get("wall_ms").is_none()));
    let timed = isogate(&["run", "--filter", "step8", "--timings"]);
    let r: Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(r["checks"][0].get("wall_ms").is_some());
}

#[test]
fn indeterminate_does_not_fail_the_run() {
    let o = isogate(&["run", "--filter", "step5.level27", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("INDETERMINATE"));
}

#[test]
fn config_errors_name_the_offending_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"groups": {"G3_5": {"modulus": 5, "generators": [[[1, 2], [2, 4]]]}}}"#).unwrap();
    let o = isogate(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("groups.G3_5.generators[0]"), "{}", stderr(&o));

    std::fs::write(&path, r#"{"modular_polynomials": {"49": "missing.txt"}}"#).unwrap();
    let o = isogate(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("modular_polynomials.49"), "{}", stderr(&o));
}

#[test]
fn jmatch_subcommand() {
    let o = isogate(&["jmatch", "--family", "j5", "--constant", "-24729001"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["verdict"]["verdict"], "no_degree_le2_root");
    assert_eq!(r["elimination_degree"], 6);
    let o = isogate(&["jmatch", "--family", "j99", "--constant", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lifts_with_config_target() {
    let cfg = concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/isogate.json");
    let o = isogate(&["lifts", "--prime", "5", "--target", "config:G3_5", "--config", cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["target_order"], 16);
    let o = isogate(&["lifts", "--prime", "3", "--target", "config:G3_5", "--config", cfg]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn x091_subcommands() {
    let o = isogate(&["x091", "quotient", "--prime", "3"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["n1"], 6);
    let o = isogate(&["x091", "quotient", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = isogate(&["x091", "points"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.as_array().unwrap().iter().all(|p| p["on_curve"] == true));
    let o = isogate(&["x091", "model"]);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["quadrics"].as_array().unwrap().len(), 10);
}
