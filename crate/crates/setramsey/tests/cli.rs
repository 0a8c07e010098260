//! End-to-end runs of the `setramsey` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setramsey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("not JSON: {l}: {e}")))
        .collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn affine_construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.jsonl");
    let out = run(&[
        "construct",
        "--affine",
        "q=2",
        "d=2",
        "k=1",
        "--out",
        path_str(&file),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json_lines(&out)[0]["N"], 4);
    assert!(dir.path().join("k4.jsonl.partitions.json").exists());

    let out = run(&["verify", path_str(&file), "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no monochromatic K_3"));
    assert_eq!(json_lines(&out)[0]["monochromatic"], false);

    // K_4 of a (3,2)-coloring always has a monochromatic edge
    let out = run(&["verify", path_str(&file), "--n", "2", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        json_lines(&out)[0]["witness"]["vertices"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn solve_reports_value_five() {
    let out = run(&["solve", "--n", "3", "--r", "3", "--s", "2", "--max-N", "6"]);
    assert!(out.status.success());
    let res = &json_lines(&out)[0];
    assert_eq!(res["value"], 5);
    assert_eq!(res["status"], "exact");
}

#[test]
fn malformed_and_usage_errors_have_distinct_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.jsonl");
    std::fs::write(&file, "{\"format_version\":1,\"k\":2,\"N\":3,\"r\":2,\"s\":1,\"slack\":false}\n{\"v\":[0,1],\"c\":[0]}\n").unwrap();
    let out = run(&["verify", path_str(&file), "--n", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_lines(&out)[0]["error"]["kind"], "malformed_input");

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_lines(&out)[0]["error"]["kind"], "usage");

    let out = run(&["verify", path_str(&dir.path().join("missing")), "--n", "3"]);
    assert_eq!(out.status.code(), Some(6));
}

#[test]
fn budget_exhaustion_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.jsonl");
    let out = run(&[
        "construct",
        "--random",
        "k=2",
        "N=60",
        "r=3",
        "s=1",
        "--seed",
        "1",
        "--out",
        path_str(&file),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", path_str(&file), "--n", "30", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn product_and_step_up_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);
    assert!(
        run(&["construct", "--pentagon", "--out", path_str(&p("pent"))])
            .status
            .success()
    );
    assert!(run(&[
        "construct",
        "--gv-code",
        "q=5",
        "m=2",
        "d=1",
        "--out",
        path_str(&p("code"))
    ])
    .status
    .success());
    let out = run(&[
        "construct",
        "--product",
        "--base",
        path_str(&p("pent")),
        "--code",
        path_str(&p("code")),
        "--trim",
        "--out",
        path_str(&p("prod")),
    ]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["N"], 25);
    assert_eq!(
        run(&["verify", path_str(&p("prod")), "--n", "3"])
            .status
            .code(),
        Some(0)
    );

    let out = run(&[
        "construct",
        "--step-up",
        "--base",
        path_str(&p("pent")),
        "--out",
        path_str(&p("up")),
    ]);
    assert!(out.status.success());
    assert_eq!(
        run(&["verify", path_str(&p("up")), "--n", "4"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn coloring_code_round_trip_through_convert() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);
    assert!(run(&[
        "construct",
        "--affine",
        "q=2",
        "d=2",
        "k=1",
        "--out",
        path_str(&p("k4"))
    ])
    .status
    .success());
    let out = run(&[
        "convert",
        "--coloring-to-code",
        path_str(&p("k4")),
        "--n",
        "3",
        "--out",
        path_str(&p("code")),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let info = &json_lines(&out)[0];
    assert_eq!(
        (
            info["q"].as_u64(),
            info["m"].as_u64(),
            info["d"].as_u64(),
            info["size"].as_u64()
        ),
        (Some(2), Some(3), Some(2), Some(4))
    );
    let out = run(&[
        "convert",
        "--code-to-coloring",
        path_str(&p("code")),
        "--out",
        path_str(&p("back")),
    ]);
    assert!(out.status.success());
    assert_eq!(
        run(&["verify", path_str(&p("back")), "--n", "3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn bounds_print_big_integers_as_strings() {
    let out = run(&[
        "bound",
        "simple-upper",
        "--n",
        "3",
        "--r",
        "100",
        "--s",
        "20",
    ]);
    assert!(out.status.success());
    assert!(json_lines(&out)[0]["value"].is_string());
    let out = run(&["bound", "turan", "--n", "4", "--r", "4", "--s", "3"]);
    assert_eq!(json_lines(&out)[0]["value"], "10");
    let out = run(&[
        "bound",
        "hypergraph",
        "--n",
        "4",
        "--k",
        "3",
        "--r",
        "2",
        "--s",
        "1",
        "--base-value",
        "6",
    ]);
    assert!(out.status.success());
}

#[test]
fn table_is_deterministic() {
    let args = [
        "table", "--n-max", "3", "--r-max", "3", "--budget", "2000", "--max-N", "7",
    ];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines = json_lines(&a);
    assert!(lines[0]["versions"]["setramsey-core"].is_string());
    let r332 = lines.iter().find(|l| l["r"] == 3 && l["s"] == 2).unwrap();
    assert_eq!(
        (r332["lower"].as_str(), r332["upper"].as_str()),
        (Some("5"), Some("5"))
    );
}
