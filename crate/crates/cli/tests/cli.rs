use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gruss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gruss"))
        .args(args)
        .output()
        .expect("spawn gruss")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn witness_dataset_is_certified() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.csv", "x,y\n0,0\n1,1\n");
    let out = gruss(&[
        "check",
        "--input",
        &input,
        "--bracket-x",
        "0,1",
        "--bracket-y",
        "0,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["certified"], true);
    assert_eq!(doc["exit_code"], 0);
    let pair = &doc["result"]["pairs"][0];
    assert_eq!(pair["gruss"]["abs_functional"], 0.25);
    assert_eq!(pair["gruss"]["classic_bound"], 0.25);
    assert_eq!(pair["companion"]["bound"], 0.25);
}

#[test]
fn estimated_brackets_certify_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.txt", "# two point witness\n0 0\n1 1\n");
    let out = gruss(&["check", "--input", &input, "--estimate-brackets"]);
    assert_eq!(out.status.code(), Some(0));
    let pair = &json(&out)["result"]["pairs"][0];
    assert_eq!(pair["bracket_x"]["source"], "estimated");
}

#[test]
fn violated_bracket_fails_in_strict_mode_only() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.csv", "0,0\n1,1\n");
    let strict = gruss(&[
        "check",
        "--input",
        &input,
        "--bracket-x",
        "0,0.5",
        "--bracket-y",
        "0,1",
    ]);
    assert_eq!(strict.status.code(), Some(1));
    let doc = json(&strict);
    assert_eq!(doc["certified"], false);
    assert!(!doc["result"]["pairs"][0]["errors"]
        .as_array()
        .unwrap()
        .is_empty());

    let diag = gruss(&[
        "check",
        "--input",
        &input,
        "--bracket-x",
        "0,0.5",
        "--bracket-y",
        "0,1",
        "--mode",
        "diagnostic",
    ]);
    assert_eq!(diag.status.code(), Some(0));
    let pair = &json(&diag)["result"]["pairs"][0];
    assert_eq!(pair["certified"], false);
    assert_eq!(pair["gruss"]["cond_x"]["satisfied"], false);
}

#[test]
fn input_errors_exit_two() {
    let out = gruss(&[
        "check",
        "--input",
        "/definitely/not/here.csv",
        "--estimate-brackets",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let ragged = write(dir.path(), "r.csv", "1,2\n3\n");
    let out = gruss(&["check", "--input", &ragged, "--estimate-brackets"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r.csv:2:"));

    let complex = write(dir.path(), "c.csv", "1,2+1i\n3,4\n");
    let out = gruss(&["check", "--input", &complex, "--estimate-brackets"]);
    assert_eq!(out.status.code(), Some(2));

    let ok = write(dir.path(), "ok.csv", "1,2\n3,4\n");
    let out = gruss(&["check", "--input", &ok]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "missing brackets are a configuration error"
    );
}

#[test]
fn complex_field_accepts_complex_cells() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "c.csv", "1+1i,0\n-1i,1\n0.5,2-0.5i\n");
    let out = gruss(&[
        "check",
        "--input",
        &input,
        "--field",
        "complex",
        "--estimate-brackets",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json(&out)["certified"], true);
}

#[test]
fn weights_and_grid_metrics() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "w.csv", "0,0\n1,1\n");
    let weights = write(dir.path(), "weights.txt", "3\n3\n");
    let metric = format!("weights:{weights}");
    let out = gruss(&[
        "check",
        "--input",
        &input,
        "--metric",
        &metric,
        "--estimate-brackets",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        json(&out)["result"]["pairs"][0]["gruss"]["abs_functional"],
        0.25
    );

    let out = gruss(&[
        "check",
        "--input",
        &input,
        "--metric",
        "grid:0,1,2,midpoint",
        "--estimate-brackets",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = gruss(&[
        "check",
        "--input",
        &input,
        "--metric",
        "grid:0,1,5,trapezoid",
        "--estimate-brackets",
    ]);
    assert_eq!(out.status.code(), Some(2), "node count must match rows");
}

#[test]
fn estimate_reports_minimal_interval() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "e.csv", "0.2\n0.8\n0.5\n");
    let out = gruss(&["estimate", "--input", &input]);
    assert_eq!(out.status.code(), Some(0));
    let col = &json(&out)["result"]["columns"][0];
    assert_eq!(col["bracket"]["lo"][0], 0.2);
    assert_eq!(col["bracket"]["hi"][0], 0.8);
    assert!((col["radius"].as_f64().unwrap() - 0.3).abs() < 1e-15);
}

#[test]
fn fuzz_is_deterministic_and_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("fuzz.json");
    let out_str = out_path.to_str().unwrap();
    let a = gruss(&[
        "fuzz",
        "--seed",
        "7",
        "--samples",
        "1500",
        "--field",
        "complex",
        "--out",
        out_str,
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert!(a.stdout.is_empty());
    let written = std::fs::read(&out_path).unwrap();
    let b = gruss(&[
        "fuzz",
        "--seed",
        "7",
        "--samples",
        "1500",
        "--field",
        "complex",
    ]);
    assert_eq!(written, b.stdout);
    let doc: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(doc["result"]["samples"], 1500);
    assert_eq!(doc["config"]["seed"], 7);
}

#[test]
fn sharpness_reaches_the_witness_ratio() {
    let out = gruss(&[
        "sharpness",
        "--seed",
        "1",
        "--samples",
        "2000",
        "--kind",
        "classic",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let ratio = json(&out)["result"]["best_ratio"].as_f64().unwrap();
    assert!((0.999..=1.0 + 1e-9).contains(&ratio), "ratio {ratio}");
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(gruss(&["fuzz", "--tolerance", "-1"]).status.code(), Some(2));
    assert_eq!(gruss(&["fuzz", "--dims", "0,2"]).status.code(), Some(2));
    assert_eq!(gruss(&["frobnicate"]).status.code(), Some(2));
}
