//! End-to-end tests of the `qfrieze` binary: output contracts, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn qfrieze(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfrieze"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn frieze_text_window_is_exact() {
    let out = qfrieze(&["frieze", "--n", "2", "--jmin", "0", "--jmax", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n = 2, columns 0..=3\n\
         f(1, 0) = X^(1,0)\n\
         f(2, 0) = X^(0,1)\n\
         f(1, 1) = X^(-1,1) + X^(-1,0)\n\
         f(2, 1) = X^(0,-1) + X^(-1,0) + X^(-1,-1)\n\
         f(1, 2) = X^(1,-1) + X^(0,-1)\n\
         f(2, 2) = X^(1,0)\n\
         f(1, 3) = X^(0,1)\n\
         f(2, 3) = X^(-1,1) + X^(-1,0)\n"
    );
    assert!(stderr(&out).is_empty());
}

#[test]
fn frieze_json_has_schema_and_entries() {
    let out = qfrieze(&["frieze", "--n", "2", "--jmin", "0", "--jmax", "3", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "qfrieze-1");
    assert_eq!(doc["kind"], "frieze");
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 8);
}

#[test]
fn frieze_default_window_covers_a_full_period() {
    let out = qfrieze(&["frieze", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["j_min"], -5);
    assert_eq!(doc["j_max"], 10);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["frieze", "--n", "4", "--jmin", "-3", "--jmax", "8", "--format", "json"],
        vec!["frieze", "--n", "4", "--jmin", "-3", "--jmax", "8", "--format", "text"],
        vec!["mutate", "--n", "4", "--seq", "1,2,3", "--format", "json"],
        vec!["verify", "--n", "2"],
    ] {
        let first = qfrieze(&args);
        let second = qfrieze(&args);
        assert!(first.status.success(), "args {args:?}");
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}

#[test]
fn mutate_single_direction_matches_known_cluster() {
    let out = qfrieze(&["mutate", "--n", "2", "--seq", "1", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kind"], "seed");
    assert_eq!(doc["b"], serde_json::json!([[0, -1], [1, 0]]));
    assert_eq!(doc["lambda"], serde_json::json!([[0, -1], [1, 0]]));
    assert_eq!(
        serde_json::to_string(&doc["cluster"][0]).unwrap(),
        r#"[{"coeff":[[0,1]],"exp":[-1,1]},{"coeff":[[0,1]],"exp":[-1,0]}]"#
    );
    assert_eq!(
        serde_json::to_string(&doc["cluster"][1]).unwrap(),
        r#"[{"coeff":[[0,1]],"exp":[0,1]}]"#
    );
}

#[test]
fn mutate_empty_sequence_returns_initial_seed() {
    let out = qfrieze(&["mutate", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["b"], serde_json::json!([[0, 1], [-1, 0]]));
    assert_eq!(
        serde_json::to_string(&doc["cluster"][0]).unwrap(),
        r#"[{"coeff":[[0,1]],"exp":[1,0]}]"#
    );
}

#[test]
fn continuant_text_matches_frieze_entry() {
    let out = qfrieze(&["continuant", "--n", "2", "--m", "2", "--i", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "P(2, 1) = X^(0,-1) + X^(-1,0) + X^(-1,-1)\n");
}

#[test]
fn verify_default_suite_passes() {
    let out = qfrieze(&["verify", "--n", "4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "qfrieze-1");
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_text_format_lists_checks() {
    let out = qfrieze(&["verify", "--n", "2", "--checks", "bijection,periodicity", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[pass] bijection"));
    assert!(text.contains("[pass] periodicity"));
    assert!(text.ends_with("2/2 checks passed\n"));
}

#[test]
fn odd_rank_is_a_usage_error() {
    for sub in ["frieze", "verify"] {
        let out = qfrieze(&[sub, "--n", "5"]);
        assert_eq!(out.status.code(), Some(2), "{sub}");
        assert!(stderr(&out).contains("--n"), "{sub}: {}", stderr(&out));
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn invalid_window_is_a_usage_error() {
    let out = qfrieze(&["frieze", "--n", "2", "--jmin", "2", "--jmax", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--jmin"));
}

#[test]
fn out_of_range_direction_is_a_usage_error() {
    let out = qfrieze(&["mutate", "--n", "2", "--seq", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--seq"));
}

#[test]
fn out_of_range_continuant_is_a_usage_error() {
    let out = qfrieze(&["continuant", "--n", "2", "--m", "2", "--i", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--i"));
    let out = qfrieze(&["continuant", "--n", "2", "--m", "3", "--i", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--m"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = qfrieze(&["verify", "--n", "2", "--checks", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--checks"));
    assert!(stderr(&out).contains("no-such-check"));
}

#[test]
fn unparseable_flags_exit_two() {
    let out = qfrieze(&["frieze", "--n", "two"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qfrieze(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_and_version_exit_zero() {
    let out = qfrieze(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("frieze"));
    let out = qfrieze(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn diagnostics_check_runs_and_honours_skip_variable() {
    let out = qfrieze(&["verify", "--n", "2", "--checks", "diagnostics"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["checks"][0]["name"], "diagnostics");
    assert_eq!(doc["checks"][0]["passed"], true);

    let out = Command::new(env!("CARGO_BIN_EXE_qfrieze"))
        .args(["verify", "--n", "2", "--checks", "diagnostics"])
        .env("QFRIEZE_SKIP_DIAGNOSTICS", "1")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let notes = doc["checks"][0]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("skipped")));
}
