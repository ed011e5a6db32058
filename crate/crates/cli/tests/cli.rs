//! Black-box tests of the `broadcastlab` binary: exit codes, output shape
//! and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_broadcastlab"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn table_exit_codes() {
    let out = run(&["table", "staticConstruction"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("18 registered, 0 failed"));

    // numeric alias
    assert_eq!(code(&run(&["table", "1"])), 0);
    // unknown table is a usage error
    assert_eq!(code(&run(&["table", "nope"])), 3);
}

#[test]
fn table_list_enumerates_ids() {
    let out = run(&["table", "list"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().any(|l| l == "bellDynamic"));
}

#[test]
fn invalid_arguments_exit_3() {
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["region", "nope"])), 3);
    assert_eq!(code(&run(&["region", "nme", "--res", "1"])), 3);
    assert_eq!(code(&run(&["region", "nme", "--cloners", "bogus"])), 3);
    assert_eq!(code(&run(&["clone", "pure"])), 3); // missing --alpha2
    assert_eq!(code(&run(&["clone", "bds", "--c1", "0.1"])), 3);
    assert_eq!(
        code(&run(&[
            "clone", "nme", "--alpha2", "0.3", "--flavor", "ssd"
        ])),
        3
    ); // ssd without --lambda
    assert_eq!(code(&run(&["optimize", "werner", "--alpha2", "0.3"])), 3); // missing --p
                                                                           // pure inputs have no non-local machine
    assert_eq!(
        code(&run(&[
            "optimize", "pure", "--alpha2", "0.3", "--mode", "nonlocal"
        ])),
        3
    );
}

#[test]
fn help_is_not_an_error() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["table", "--help"])), 0);
}

#[test]
fn region_csv_shape_and_determinism() {
    let args = ["region", "werner", "--res", "5,7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "region output must be deterministic");
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "alpha2,p,silc,dsdlc,sinlc,dsdnlc,input_entangled"
    );
    assert_eq!(lines.count(), 5 * 7);
}

#[test]
fn region_bds_reports_physicality() {
    let out = run(&["region", "bds", "--res", "3,3,3", "--cloners", "sinlc"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "c1,c2,c3,sinlc,input_entangled,input_physical"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 27);
    // the corner (1,1,1) is unphysical, the centre (0,0,0) is separable
    assert!(rows.iter().any(|r| r.ends_with(",0,0,0")));
    assert!(rows.contains(&"0,0,0,0,0,1"));
}

#[test]
fn region_json_and_out_file() {
    let dir = std::env::temp_dir().join("broadcastlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nme.json");
    let out = run(&[
        "region",
        "nme",
        "--res",
        "11",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let payload: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(payload["axes"], serde_json::json!(["alpha2"]));
    assert_eq!(payload["rows"].as_array().unwrap().len(), 11);
    // JSON numbers are decimal strings
    assert!(payload["rows"][1]["coords"][0].is_string());
}

#[test]
fn clone_reports_broadcastable_pairs() {
    let out = run(&[
        "clone", "nme", "--alpha2", "0.5", "--mode", "nonlocal", "--flavor", "dsd",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mode"], "nonlocal");
    assert_eq!(v["broadcastable"], true);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
    let lam: f64 = v["lambda"].as_str().unwrap().parse().unwrap();
    assert!((lam - 0.13).abs() < 1e-10);
}

#[test]
fn optimize_agrees_with_numeric_oracle() {
    let out = run(&[
        "optimize", "bds", "--c1", "-0.7", "--c2", "-0.6", "--c3", "-0.65", "--mode", "nonlocal",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let gap: f64 = v["gap"].as_str().unwrap().parse().unwrap();
    assert!(gap <= 1e-5);
}

#[test]
fn verify_passes() {
    let out = run(&["verify"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("verify: PASS"));
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 15);
}

#[test]
fn eps_override_is_honoured() {
    // an absurdly large tolerance declares every state separable, so the
    // broadcastable ranges collapse and the golden checks fail
    let out = Command::new(env!("CARGO_BIN_EXE_broadcastlab"))
        .args(["table", "localnonmaximally"])
        .env("BROADCASTLAB_EPS", "10.0")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 2);
}
