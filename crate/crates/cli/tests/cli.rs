//! End-to-end tests of the binary: flags, output shapes, exit codes.

use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schmidt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_example() {
    let out = run(&[
        "count", "--family", "Q", "--n", "3", "--k", "2", "--t", "1", "--r", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn enumerate_plain_and_json() {
    let out = run(&[
        "enumerate", "--family", "Q", "--n", "3", "--k", "2", "--t", "1", "--r", "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, vec!["[3,1]", "[3,2]"]);

    let out = run(&[
        "enumerate", "--family", "Q", "--n", "3", "--k", "2", "--t", "1", "--r", "2", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v, serde_json::json!([[3, 1], [3, 2]]));
}

#[test]
fn map_forward_and_backward() {
    let dir = std::env::temp_dir();
    let fwd = dir.join("schmidt_cli_map_fwd.json");
    fs::write(&fwd, "[[3,1],[2]]").unwrap();
    let out = run(&[
        "map", "--theorem", "p=q", "--direction", "forward",
        "--input", fwd.to_str().unwrap(), "--k", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[5,3,1]");

    let bwd = dir.join("schmidt_cli_map_bwd.json");
    fs::write(&bwd, "[5,3,1]").unwrap();
    let out = run(&[
        "map", "--theorem", "p=q", "--direction", "backward",
        "--input", bwd.to_str().unwrap(), "--k", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "[[3,1],[2]]");
}

#[test]
fn verify_ok_and_corrupted() {
    let out = run(&["verify", "--theorem", "p=q", "--n-max", "5", "--k", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));

    let out = run(&[
        "verify", "--theorem", "p=q", "--n-max", "5", "--k", "2", "--corrupt",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("witness"), "stderr was: {err}");
}

#[test]
fn verify_json_round_trips() {
    let out = run(&[
        "verify", "--theorem", "h=d", "--n-max", "3", "--k", "1", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["theorem"], "h=d");
    assert!(v["cells"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn series_pentagonal_prefix() {
    let out = run(&["series", "--expr", "POCH(1,1)^1", "--terms", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 -1 -1 0 0 1");
}

#[test]
fn render_diamond_and_overpartition() {
    let dir = std::env::temp_dir();
    let dpath = dir.join("schmidt_cli_diamond.json");
    fs::write(&dpath, r#"{"k":1,"entries":[1,0,1,0]}"#).unwrap();
    let out = run(&[
        "render", "--diamond", dpath.to_str().unwrap(), "--format", "dot",
    ]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph diamond {"));
    assert!(dot.contains("p1 -> p2;"));

    let ppath = dir.join("schmidt_cli_over.json");
    fs::write(&ppath, r#"[{"part":2,"over":true},{"part":1,"over":false}]"#).unwrap();
    let out = run(&[
        "render", "--overpartition", ppath.to_str().unwrap(), "--format", "text",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "o *\no\n");
}

#[test]
fn usage_errors_exit_2() {
    // missing required flags (clap usage error)
    let out = run(&["count", "--family", "Q"]);
    assert_eq!(out.status.code(), Some(2));

    // well-formed flags, domain error (family needs t and r)
    let out = run(&["count", "--family", "Q", "--n", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown family
    let out = run(&["count", "--family", "NOPE", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
