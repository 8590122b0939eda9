//! End-to-end tests of the binary: exit codes and file outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fullerene"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &Path, args: &[&str], name: &str) -> PathBuf {
    let out = dir.join(name);
    let mut full = args.to_vec();
    let out_s = out.to_str().unwrap().to_string();
    full.extend_from_slice(&["--out", &out_s]);
    let res = run(&full);
    assert!(res.status.success(), "{:?}", res);
    out
}

#[test]
fn generate_validate_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let c20 = generate(
        dir.path(),
        &["generate", "--family", "nanotube", "--k", "0"],
        "c20.pc",
    );

    let validate = run(&["validate", path_str(&c20)]);
    assert!(validate.status.success());

    let report = dir.path().join("out");
    let verify = run(&["verify", path_str(&c20), "--out", path_str(&report)]);
    assert!(verify.status.success(), "{verify:?}");
    let csv = std::fs::read_to_string(report.with_extension("csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph_id,n,f,pentagons,length,optimal,w,p3_ok,pentagon_ok,two_white_ok,\
max_charge_halfunits,conserved,bound,bound_ok,ms"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("c20#0,20,12,12,20,true,0,true,true,true,0,true,16,true,"));

    // the json row carries the same values
    let json = std::fs::read_to_string(report.with_extension("json")).unwrap();
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows[0]["graph_id"], "c20#0");
    assert_eq!(rows[0]["length"], 20);
    assert_eq!(rows[0]["bound"], 16);
    assert_eq!(rows[0]["audit"]["passed"], true);
    assert_eq!(rows[0]["bound_chain"]["bound_satisfied"], true);
}

#[test]
fn generate_buckyball_json_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let c60 = generate(
        dir.path(),
        &["generate", "--family", "buckyball", "--format", "json"],
        "c60.json",
    );
    let solve = run(&["solve", path_str(&c60)]);
    assert!(solve.status.success());
    let stdout = String::from_utf8(solve.stdout).unwrap();
    assert!(stdout.contains("length 60"), "{stdout}");

    let heur = run(&["solve", path_str(&c60), "--heuristic", "--seed", "3"]);
    assert!(heur.status.success());
    let stdout = String::from_utf8(heur.stdout).unwrap();
    assert!(stdout.contains("heuristic length"), "{stdout}");
}

#[test]
fn negative_k_is_a_usage_error() {
    let res = run(&[
        "generate",
        "--family",
        "nanotube",
        "--k",
        "-1",
        "--out",
        "/tmp/never-written.pc",
    ]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn garbage_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.pc");
    std::fs::write(&bad, b"not planar code and not json").unwrap();
    for cmd in ["validate", "solve", "verify", "oracle-check"] {
        let res = run(&[cmd, path_str(&bad)]);
        assert_eq!(res.status.code(), Some(2), "{cmd}");
    }
}

#[test]
fn validate_flags_non_fullerene_json() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    std::fs::write(
        &cube,
        r#"{"n": 8, "rotation": [[3,4,1],[0,5,2],[1,6,3],[2,7,0],[0,7,5],[1,4,6],[5,7,2],[4,3,6]]}"#,
    )
    .unwrap();
    let res = run(&["validate", path_str(&cube)]);
    assert_eq!(res.status.code(), Some(1));
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!(stdout.contains("FAIL"), "{stdout}");
}

#[test]
fn verify_constrained_instance_reports_flags() {
    let dir = tempfile::tempdir().unwrap();
    let c30 = generate(
        dir.path(),
        &["generate", "--family", "nanotube", "--k", "1"],
        "c30.pc",
    );
    let report = dir.path().join("flagged");
    let res = run(&[
        "verify",
        path_str(&c30),
        "--forbid",
        "5,14",
        "--radius",
        "1",
        "--out",
        path_str(&report),
    ]);
    // conservation holds, so the constrained run still exits 0
    assert!(res.status.success(), "{res:?}");
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!(stdout.contains("pent=false"), "{stdout}");
    assert!(stdout.contains("improvable near faces"), "{stdout}");
    let json = std::fs::read_to_string(report.with_extension("json")).unwrap();
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows[0]["length"], 28);
    assert_eq!(rows[0]["pentagon_ok"], false);
    assert!(!rows[0]["witness_moves"].as_array().unwrap().is_empty());
    // the rule log serializes with the audit
    assert!(rows[0]["audit"]["face_final"].is_array());
}

#[test]
fn oracle_check_and_fault_injection() {
    let dir = tempfile::tempdir().unwrap();
    let c20 = generate(
        dir.path(),
        &["generate", "--family", "nanotube", "--k", "0"],
        "c20.pc",
    );
    let ok = run(&["oracle-check", path_str(&c20), "--each-forbidden"]);
    assert!(ok.status.success());
    let stdout = String::from_utf8(ok.stdout).unwrap();
    assert!(stdout.contains("21 instances, pass"), "{stdout}");

    let bad = run(&["oracle-check", path_str(&c20), "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    let stdout = String::from_utf8(bad.stdout).unwrap();
    assert!(stdout.contains("MISMATCH"), "{stdout}");

    // refusal when graphs exceed the oracle limit
    let c60 = generate(dir.path(), &["generate", "--family", "buckyball"], "c60.pc");
    let refused = run(&["oracle-check", path_str(&c60), "--n-limit", "30"]);
    assert_eq!(refused.status.code(), Some(2));
}
