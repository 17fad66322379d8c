//! End-to-end checks of the binary: exit codes, file round trips, and
//! the report formats downstream tooling consumes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn latticetoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latticetoff"))
        .args(args)
        .env("LATTICETOFF_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp_file(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("latticetoff-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn build_unknown_name_exits_2_with_registry() {
    let out = latticetoff(&["build", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("paper-toffoli"),
        "registry listing missing: {err}"
    );
}

#[test]
fn build_then_metrics_round_trip_keeps_t_depth() {
    let path = tmp_file("and.json");
    let out = latticetoff(&[
        "build",
        "and",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = latticetoff(&["metrics", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["t_depth"], 1);
    assert_eq!(doc["t_count"], 4);
    assert_eq!(doc["ancilla_count"], 3);
    std::fs::remove_file(path).ok();
}

#[test]
fn build_qasm_reparses() {
    let path = tmp_file("pt.qasm");
    let out = latticetoff(&["build", "paper-toffoli", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    let out = latticetoff(&["metrics", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["t_count"], 7);
    assert_eq!(doc["t_depth"], 2);
    assert_eq!(doc["depth_multi"], 8);
    assert_eq!(doc["cnot_steps"], 6);
    std::fs::remove_file(path).ok();
}

#[test]
fn metrics_of_paper_toffoli_match_the_headline() {
    let out = latticetoff(&["metrics", "paper-toffoli", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["t_count"], 7);
    assert_eq!(doc["max_interaction_degree"], 3);
}

#[test]
fn metrics_on_garbage_file_exits_2() {
    let path = tmp_file("junk.qasm");
    std::fs::write(&path, "not qasm at all").unwrap();
    let out = latticetoff(&["metrics", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_paper_toffoli_passes() {
    let out = latticetoff(&["verify", "paper-toffoli", "--against", "toffoli"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_rccx_fails_with_counterexample() {
    let out = latticetoff(&["verify", "rccx", "--against", "toffoli"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("counterexample"), "{text}");
    assert!(text.contains("|110>"), "{text}");
}

#[test]
fn verify_measurement_toffoli_passes_channel_mode() {
    let out = latticetoff(&["verify", "toffoli-meas", "--against", "toffoli"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_against_a_unitary_file() {
    // the controlled-S matrix diag(1, 1, 1, i), with i = ω²
    let path = tmp_file("cs-ref.json");
    let one = [1, 0, 0, 0, 0];
    let zero = [0, 0, 0, 0, 0];
    let i = [0, 0, 1, 0, 0];
    let doc = serde_json::json!({
        "entries": [
            [one, zero, zero, zero],
            [zero, one, zero, zero],
            [zero, zero, one, zero],
            [zero, zero, zero, i],
        ]
    });
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let out = latticetoff(&["verify", "cs", "--against", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    // the same file is not a Toffoli reference for rccx (dimension guard)
    let out = latticetoff(&["verify", "toffoli-7t", "--against", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn map_reports_embedding_and_tiles() {
    let out = latticetoff(&["map", "paper-toffoli", "--arch", "grid:6x4", "--tile"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("SWAP-free embedding"));
    assert!(text.contains("tiles: 4"));
    let out = latticetoff(&["map", "toffoli-7t", "--arch", "grid:3x2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("no embedding"));
}

#[test]
fn compare_shows_swap_contrast() {
    let out = latticetoff(&[
        "compare",
        "paper-toffoli",
        "toffoli-7t",
        "--arch",
        "grid:3x2",
        "--json",
    ]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs[0]["swap_count"], 0);
    assert!(docs[1]["swap_count"].as_u64().unwrap() >= 1);
}

#[test]
fn compare_identical_names_gives_identical_rows() {
    let out = latticetoff(&["compare", "and", "and", "--arch", "grid:3x2", "--json"]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(docs[0], docs[1]);
}

#[test]
fn compare_reports_selinger_connectivity_degree() {
    let out = latticetoff(&[
        "compare",
        "selinger",
        "paper-toffoli",
        "--arch",
        "grid:4x4",
        "--json",
    ]);
    assert!(out.status.success());
    let docs: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(docs[0]["max_interaction_degree"].as_u64().unwrap() > 3);
    assert_eq!(docs[1]["max_interaction_degree"], 3);
}

#[test]
fn verify_accepts_circuit_files() {
    let path = tmp_file("pt-verify.json");
    let out = latticetoff(&[
        "build",
        "paper-toffoli",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = latticetoff(&["verify", path.to_str().unwrap(), "--against", "toffoli"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    std::fs::remove_file(path).ok();
}

#[test]
fn selfcheck_passes() {
    let out = latticetoff(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("12 checks passed"));
}

#[test]
fn bad_arch_spec_exits_2() {
    let out = latticetoff(&["map", "paper-toffoli", "--arch", "torus:3x2"]);
    assert_eq!(out.status.code(), Some(2));
}
