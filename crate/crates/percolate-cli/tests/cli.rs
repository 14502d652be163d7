//! End-to-end tests against the built binary: output schemas, exit codes,
//! and determinism across worker counts.

use std::process::{Command, Output};

fn percolate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_percolate"))
        .args(args)
        .env_remove("PERCOLATE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn compute_known_values() {
    for (expr, r, value) in [
        ("path 3 x path 3", "2", 6),
        ("cycle 6", "2", 3),
        ("path 7 x path 6", "2", 12),
        ("biclique 3 3", "3", 3),
        ("cycle 10", "2", 5),
    ] {
        let out = percolate(&["compute", expr, "--r", r]);
        assert_eq!(exit_code(&out), 0, "{expr}");
        let doc = stdout_json(&out);
        assert_eq!(doc["outcome"], "exact", "{expr}");
        assert_eq!(doc["value"], value, "{expr}");
        assert_eq!(
            doc["witness"].as_array().unwrap().len(),
            value as usize,
            "{expr}"
        );
    }
}

#[test]
fn parse_error_exits_1_with_caret() {
    let out = percolate(&["compute", "path 3 x wrong 5"]);
    assert_eq!(exit_code(&out), 1);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown builder"), "{err}");
    assert!(err.contains('^'), "{err}");
}

#[test]
fn usage_error_exits_1() {
    let out = percolate(&["frobnicate"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn tiny_budget_is_inconclusive_exit_2() {
    let out = percolate(&["compute", "path 5 x path 5", "--budget", "10"]);
    assert_eq!(exit_code(&out), 2);
    let doc = stdout_json(&out);
    assert_eq!(doc["outcome"], "inconclusive");
    assert!(doc["lower_bound"].as_u64().unwrap() <= doc["upper_bound"].as_u64().unwrap());
}

#[test]
fn budget_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_percolate"))
        .args(["compute", "path 5 x path 5"])
        .env("PERCOLATE_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn construct_grid_and_dot() {
    let out = percolate(&["construct", "grid", "8", "8"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["size"], 16);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["meta"]["repaired"], false);

    let dot = percolate(&["construct", "grid", "4", "4", "--format", "dot"]);
    assert_eq!(exit_code(&dot), 0);
    let text = String::from_utf8_lossy(&dot.stdout);
    assert_eq!(text.matches("style=filled").count(), 8);
}

#[test]
fn construct_layer_and_double() {
    let out = percolate(&["construct", "layer", "cycle 5", "path 4", "0"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["size"], 5);
    assert_eq!(doc["verified"], true);

    let out = percolate(&["construct", "double", "cycle 5", "path 3", "0", "1"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["size"], 6);
    assert_eq!(doc["verified"], true);
}

#[test]
fn construct_hypothesis_failure_exits_1() {
    let out = percolate(&["construct", "punctured", "cycle 5", "path 3", "0", "0"]);
    assert_eq!(exit_code(&out), 1);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("hypothesis fails"), "{err}");
}

#[test]
fn unverified_layer_exits_3() {
    // min degree of P5 is 1, so the layer does not percolate at r = 2
    let out = percolate(&["construct", "layer", "path 5", "path 4", "0"]);
    assert_eq!(exit_code(&out), 3);
    let doc = stdout_json(&out);
    assert_eq!(doc["verified"], false);
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = percolate(&["verify", "families"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["passed"], true);

    let out = percolate(&["verify", "grid-theorem", "--max", "5"]);
    assert_eq!(exit_code(&out), 0);

    let out = percolate(&["verify", "no-such-suite"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn enumerate_includes_c6() {
    let out = percolate(&["enumerate", "--max", "6"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    let graphs = doc["graphs"].as_array().unwrap();
    assert!(graphs.iter().any(|g| {
        g["order"] == 6
            && g["degree_sequence"]
                .as_array()
                .unwrap()
                .iter()
                .all(|d| d == 2)
    }));
    let out9 = percolate(&["enumerate", "--max", "9"]);
    assert_eq!(exit_code(&out9), 1);
}

#[test]
fn file_expressions_parse() {
    let dir = std::env::temp_dir();
    let path = dir.join("percolate_cli_test_c4.el");
    std::fs::write(&path, "4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let expr = format!("file:{} x path 2", path.display());
    let out = percolate(&["compute", &expr]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    // C4 x K2 = two disjoint C4, so the value is 2 m(C4, 2) = 4
    assert_eq!(doc["value"], 4);
    std::fs::remove_file(&path).ok();
}

#[test]
fn output_is_deterministic_across_workers() {
    let base = percolate(&["compute", "path 5 x path 4", "--workers", "1"]);
    let other = percolate(&["compute", "path 5 x path 4", "--workers", "4"]);
    assert_eq!(exit_code(&base), 0);
    assert_eq!(base.stdout, other.stdout);

    let v1 = percolate(&["verify", "upper-bounds", "--workers", "1"]);
    let v4 = percolate(&["verify", "upper-bounds", "--workers", "4"]);
    assert_eq!(exit_code(&v1), 0);
    assert_eq!(v1.stdout, v4.stdout);
}

#[test]
fn table_format_is_derived_from_the_same_data() {
    let json = percolate(&["compute", "cycle 6"]);
    let table = percolate(&["compute", "cycle 6", "--format", "table"]);
    let doc = stdout_json(&json);
    let text = String::from_utf8_lossy(&table.stdout);
    assert!(text.contains(&format!("value: {}", doc["value"])));
    assert!(text.contains("witness: [0, 2, 4]"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("percolate_cli_test_out.json");
    let out = percolate(&["compute", "cycle 6", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["value"], 3);
    std::fs::remove_file(&path).ok();
}

#[test]
fn compute_trace_lists_rounds() {
    let out = percolate(&["compute", "cycle 6", "--trace"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    let rounds = doc["trace"]["rounds"].as_array().unwrap();
    // witness {0,2,4} fills C6 in one round
    assert_eq!(rounds.len(), 2);
    assert_eq!(rounds[0], serde_json::json!([0, 2, 4]));
    assert_eq!(rounds[1], serde_json::json!([0, 1, 2, 3, 4, 5]));
    assert_eq!(doc["trace"]["newly_infected"], serde_json::json!([[1, 3, 5]]));
}

#[test]
fn explore_probes_are_observational() {
    let out = percolate(&["explore", "min-factor"]);
    assert_eq!(exit_code(&out), 0);
    let doc = stdout_json(&out);
    assert!(doc["observations"].as_array().unwrap().len() > 0);
    let out = percolate(&["explore", "bogus"]);
    assert_eq!(exit_code(&out), 1);
}
