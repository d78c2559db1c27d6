//! End-to-end tests of the `interval-coloring` binary: the exit-code
//! contract, certificate round-trips, byte-level determinism, and DOT
//! export.

use std::process::{Command, Output};

use interval_coloring::certificate::Certificate;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_interval-coloring"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn gen_emits_parseable_edge_lists() {
    let output = run(&["gen", "--family", "cylinder", "--params", "3,5"]);
    assert!(output.status.success());
    let g = interval_coloring::Graph::from_edge_list_str(&stdout(&output)).unwrap();
    assert_eq!(g.vertex_count(), 15);
    assert_eq!(g.edge_count(), 25);
}

#[test]
fn construct_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("grid.json");
    let output = run(&[
        "construct",
        "--family",
        "grid",
        "--params",
        "3,4",
        "--mode",
        "widest",
        "-o",
        cert_path.to_str().unwrap(),
    ]);
    assert!(output.status.success());

    let cert = Certificate::read(&cert_path).unwrap();
    assert_eq!(cert.t, 8);
    assert_eq!(cert.verdict, "valid");

    let verify = run(&["verify", cert_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(stdout(&verify).contains("valid interval 8-coloring"));
}

#[test]
fn construct_examples_from_each_family() {
    for (family, params, mode, expected_t) in [
        ("grid", "3,4", "widest", 8u32),
        ("cylinder", "3,3", "minimal", 6),
        ("torus", "6,3", "widest", 10),
    ] {
        let dir = tempfile::tempdir().unwrap();
        let cert_path = dir.path().join("cert.json");
        let output = run(&[
            "construct",
            "--family",
            family,
            "--params",
            params,
            "--mode",
            mode,
            "-o",
            cert_path.to_str().unwrap(),
        ]);
        assert!(output.status.success(), "{family} {params} {mode}");
        let cert = Certificate::read(&cert_path).unwrap();
        assert_eq!(cert.t, expected_t, "{family} {params}");
        assert_eq!(cert.verdict, "valid");
    }
}

#[test]
fn mutated_certificate_fails_verification_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    run(&[
        "construct",
        "--family",
        "grid",
        "--params",
        "3,3",
        "-o",
        cert_path.to_str().unwrap(),
    ]);
    let mut cert = Certificate::read(&cert_path).unwrap();
    cert.colors[0] += 3;
    cert.write(&cert_path).unwrap();

    let verify = run(&["verify", cert_path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(1));
    assert!(stdout(&verify).contains("invalid"));
    assert!(stdout(&verify).contains("vertex") || stdout(&verify).contains("color"));
}

#[test]
fn truncated_certificate_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"n\": 4, \"edges\": [[0,").unwrap();
    let verify = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(64));
}

#[test]
fn search_exit_codes() {
    // Found.
    let output = run(&[
        "search",
        "--family",
        "hypercube",
        "--params",
        "3",
        "--stat",
        "W",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("W = 6"));

    let output = run(&[
        "search", "--family", "cylinder", "--params", "2,4", "--stat", "w",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("w = 3"));

    // Exhausted.
    let output = run(&["search", "--family", "cycle", "--params", "3", "--t", "3"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("exhausted"));

    // Inconclusive under a tiny node budget.
    let output = run(&[
        "search",
        "--family",
        "hypercube",
        "--params",
        "3",
        "--stat",
        "W",
        "--max-nodes",
        "3",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_env_budget_override() {
    let output = bin()
        .args([
            "search",
            "--family",
            "hypercube",
            "--params",
            "3",
            "--stat",
            "W",
        ])
        .env("INTERVAL_BUDGET_NODES", "3")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_from_edge_list_and_records() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("c4.edges");
    let record_path = dir.path().join("outcome.json");
    let cert_path = dir.path().join("witness.json");
    run(&[
        "gen",
        "--family",
        "cycle",
        "--params",
        "4",
        "-o",
        graph_path.to_str().unwrap(),
    ]);
    let output = run(&[
        "search",
        "--input",
        graph_path.to_str().unwrap(),
        "--t",
        "2",
        "--record-out",
        record_path.to_str().unwrap(),
        "--cert-out",
        cert_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));

    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&record_path).unwrap()).unwrap();
    assert_eq!(record["status"], "found");
    assert_eq!(record["t"], 2);
    assert!(record["nodes"].as_u64().unwrap() > 0);
    assert!(record["seconds"].as_f64().is_some());

    let cert = Certificate::read(&cert_path).unwrap();
    assert_eq!(cert.verdict, "valid");
    assert_eq!(cert.t, 2);
}

#[test]
fn profile_output() {
    let output = run(&[
        "search",
        "--family",
        "cycle",
        "--params",
        "4",
        "--profile",
        "2..4",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("t=2 yes"));
    assert!(text.contains("t=3 yes"));
    assert!(text.contains("t=4 no"));
}

#[test]
fn bounds_table_and_record() {
    let dir = tempfile::tempdir().unwrap();
    let record_path = dir.path().join("bounds.json");
    let output = run(&[
        "bounds",
        "--family",
        "cylinder",
        "--params",
        "4,8",
        "--record-out",
        record_path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("C(4,8)"));
    assert!(text.contains("14"));

    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&record_path).unwrap()).unwrap();
    let lowers = record["lower_bounds"].as_array().unwrap();
    assert!(lowers.iter().any(|b| b[1] == 14));
}

#[test]
fn matrix_runs_batches() {
    let output = run(&[
        "matrix",
        "--family",
        "grid",
        "--params",
        "2..5,2..5",
        "--mode",
        "widest",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 16);
    assert!(text.lines().all(|line| line.ends_with("ok")));

    let output = run(&[
        "matrix",
        "--family",
        "cylinder",
        "--params",
        "3..9,3..11:2",
        "--mode",
        "minimal",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output).lines().count(), 35);
}

#[test]
fn matrix_full_scale_batches() {
    // Whole-range batch runs: grids up to 12, even widest cylinders up to
    // 16 rows, odd-circumference tori up to 12 rows. Every row must pass.
    for (family, params, mode, rows) in [
        ("grid", "2..12,2..12", "widest", 121),
        ("cylinder", "2..16:2,4..16:2", "widest", 56),
        ("torus", "4..12:2,3..13:2", "widest", 30),
    ] {
        let output = run(&["matrix", "--family", family, "--params", params, "--mode", mode]);
        assert_eq!(output.status.code(), Some(0), "{family} {params}");
        let text = stdout(&output);
        assert_eq!(text.lines().count(), rows, "{family} {params}");
        assert!(text.lines().all(|line| line.ends_with("ok")));
    }
}

#[test]
fn construct_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let manifest = dir.path().join("manifest.json");
    for path in [&a, &b] {
        let output = run(&[
            "construct",
            "--family",
            "torus",
            "--params",
            "4,6",
            "--mode",
            "widest",
            "-o",
            path.to_str().unwrap(),
            "--manifest",
            manifest.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(
        bytes_a, bytes_b,
        "identical manifests must give identical bytes"
    );

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest).unwrap()).unwrap();
    assert_eq!(manifest["command"], "construct");
    assert_eq!(manifest["deterministic"], true);
}

#[test]
fn export_dot_labels_every_edge() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let dot_path = dir.path().join("graph.dot");
    run(&[
        "construct",
        "--family",
        "cylinder",
        "--params",
        "4,4",
        "-o",
        cert_path.to_str().unwrap(),
    ]);
    let output = run(&[
        "export-dot",
        cert_path.to_str().unwrap(),
        "-o",
        dot_path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    let cert = Certificate::read(&cert_path).unwrap();
    assert_eq!(dot.matches("label=").count(), cert.colors.len());
    for color in &cert.colors {
        assert!(dot.contains(&format!("label=\"{color}\"")));
    }
}

#[test]
fn usage_errors_exit_64() {
    // Unknown subcommand.
    let output = run(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(64));

    // Unsupported family/mode combination lists what is supported.
    let output = run(&[
        "construct",
        "--family",
        "grid",
        "--params",
        "3,4",
        "--mode",
        "minimal",
    ]);
    assert_eq!(output.status.code(), Some(64));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("supported"));

    // Conflicting search actions.
    let output = run(&[
        "search", "--family", "cycle", "--params", "4", "--t", "2", "--stat", "W",
    ]);
    assert_eq!(output.status.code(), Some(64));

    // Out-of-range family parameters name the offending parameter.
    let output = run(&["gen", "--family", "torus", "--params", "2,5"]);
    assert_eq!(output.status.code(), Some(64));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains('m'));
}

#[test]
fn help_succeeds() {
    let output = run(&["--help"]);
    assert!(output.status.success());
    for subcommand in [
        "gen",
        "construct",
        "verify",
        "search",
        "bounds",
        "matrix",
        "export-dot",
    ] {
        assert!(stdout(&output).contains(subcommand), "{subcommand} in help");
    }
}
