//! End-to-end contract tests for the `matroidq` binary: exit codes, file
//! round-trips, JSON record shapes, and deterministic replay.

use std::path::Path;
use std::process::{Command, Output};

use matroidq::matroid::MatroidSpec;

fn matroidq(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroidq"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON record")
}

fn write_fixtures(dir: &Path) {
    for (name, args) in [
        ("u24.matroid", vec!["--kind", "uniform", "--n", "4", "--r", "2"]),
        ("a1.matroid", vec!["--kind", "deletedBasis1", "--n", "4", "--r", "2", "--A", "0,1"]),
        ("a1_25.matroid", vec!["--kind", "deletedBasis1", "--n", "5", "--r", "2", "--A", "0,1"]),
        ("mA.matroid", vec!["--kind", "pavingCounter", "--n", "5", "--r", "3", "--A", "0,1"]),
    ] {
        let mut full = vec!["gen"];
        full.extend(args);
        full.extend(["-o", name]);
        let out = matroidq(dir, &full);
        assert!(out.status.success(), "gen {name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn exit_codes_follow_the_holds_fails_error_contract() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    // Property holds → 0.
    let out = matroidq(dir.path(), &["check", "u24.matroid", "uniform", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    // Property fails → 1.
    let out = matroidq(dir.path(), &["check", "a1.matroid", "uniform", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(1));
    // Missing file → 2.
    let out = matroidq(dir.path(), &["check", "nope.matroid", "uniform"]);
    assert_eq!(out.status.code(), Some(2));
    // Unsupported mode → 2.
    let out = matroidq(dir.path(), &["check", "u24.matroid", "eulerian", "--mode", "quantum"]);
    assert_eq!(out.status.code(), Some(2));
    let out = matroidq(dir.path(), &["check", "u24.matroid", "axioms", "--mode", "quantum"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown property → usage error 2.
    let out = matroidq(dir.path(), &["check", "u24.matroid", "regular"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_emits_a_json_line_with_witness_and_query_counts() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    let out = matroidq(dir.path(), &["check", "mA.matroid", "paving", "--mode", "quantum", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let rec: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["property"], "paving");
    assert_eq!(rec["mode"], "quantum");
    assert_eq!(rec["answer"], 0);
    // The only dependent 2-set of this fixture is the excluded pair.
    assert_eq!(rec["witness"], "0,1");
    assert!(rec["classicalQueries"].as_u64().unwrap() > 0);
    assert!(rec["quantumQueries"].as_u64().unwrap() > 0);

    let out = matroidq(dir.path(), &["check", "a1_25.matroid", "eulerian"]);
    let rec = stdout_json(&out);
    assert_eq!(rec["answer"], 1);
    assert_eq!(rec["mode"], "bruteforce");
    assert_eq!(rec["witness"], serde_json::Value::Null);
    assert_eq!(rec["quantumQueries"], 0);

    let out = matroidq(dir.path(), &["check", "u24.matroid", "axioms"]);
    assert_eq!(stdout_json(&out)["answer"], 1);
}

#[test]
fn gen_output_reparses_to_the_same_description() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    for name in ["u24.matroid", "a1.matroid", "a1_25.matroid", "mA.matroid"] {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        let spec = MatroidSpec::parse(&text).unwrap();
        assert_eq!(spec.to_file_string(), text, "{name} round-trips byte for byte");
    }
}

#[test]
fn gen_materializes_base_indicator_payloads() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    // All six 2-sets of U_{2,4} are bases, in colex order.
    let out = matroidq(dir.path(), &["gen", "--kind", "basisFamily", "--n", "4", "--r", "2", "--from", "u24.matroid"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "matroid n=4 kind=basisFamily r=2\n111111\n");

    // Deleting the basis {0,1} clears exactly colex position 0.
    let out = matroidq(dir.path(), &["gen", "--kind", "basisFamily", "--n", "4", "--from", "a1.matroid"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("\n011111\n"), "payload: {text}");

    // A full truth table re-encoding answers identically.
    let out = matroidq(dir.path(), &["gen", "--kind", "subsetFamily", "--n", "4", "--from", "u24.matroid", "-o", "u24_table.matroid"]);
    assert!(out.status.success());
    let out = matroidq(dir.path(), &["check", "u24_table.matroid", "uniform", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_rejects_inconsistent_flag_combinations() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    // Family kinds require a source; closed-form kinds refuse one.
    let out = matroidq(dir.path(), &["gen", "--kind", "basisFamily", "--n", "4", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = matroidq(dir.path(), &["gen", "--kind", "uniform", "--n", "4", "--r", "2", "--from", "u24.matroid"]);
    assert_eq!(out.status.code(), Some(2));
    // Ground-set mismatch against the source.
    let out = matroidq(dir.path(), &["gen", "--kind", "basisFamily", "--n", "5", "--from", "u24.matroid"]);
    assert_eq!(out.status.code(), Some(2));
    // Construction validation propagates (excluded set of the wrong size).
    let out = matroidq(dir.path(), &["gen", "--kind", "deletedBasis1", "--n", "4", "--r", "2", "--A", "0,1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn girth_reports_match_both_modes() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    let out = matroidq(dir.path(), &["girth", "a1_25.matroid", "--mode", "quantum", "--seed", "5"]);
    let rec = stdout_json(&out);
    assert_eq!(rec["girth"], "2");
    assert_eq!(rec["witness"], "0,1");

    let out = matroidq(dir.path(), &["girth", "a1_25.matroid", "--mode", "bruteforce"]);
    let rec = stdout_json(&out);
    assert_eq!(rec["girth"], "2");
    assert_eq!(rec["quantumQueries"], 0);

    let out = matroidq(dir.path(), &["girth", "u24.matroid", "--seed", "2"]);
    assert_eq!(stdout_json(&out)["girth"], "3");
}

#[test]
fn count_reports_structure_totals_with_billing() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path());

    for (what, expected) in [("bases", 6), ("circuits", 4), ("flats", 6), ("hyperplanes", 4)] {
        let out = matroidq(dir.path(), &["count", "u24.matroid", what]);
        let rec = stdout_json(&out);
        assert_eq!(rec["count"], expected, "{what} of the rank-2 4-element uniform matroid");
        // The scan answers through the oracle: a full 2⁴ table per run.
        assert_eq!(rec["classicalQueries"], 16);
    }
}

#[test]
fn bench_csv_has_the_fixed_schema_and_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = matroidq(
        dir.path(),
        &["bench", "pavingDecision", "--n", "6..8", "--trials", "4", "--seed", "11", "-o", "b.csv"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["rows"], 24);

    let text = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,r,algorithm,trial,seed,classicalQueries,quantumQueries,answer,groundTruth,correct,wallTimeMicros"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3 * 4 * 2, "one algorithm row and one reference row per trial");
    // Without --timings the timing column is pinned to zero.
    assert!(rows.iter().all(|r| r.ends_with(",0")));
    // Fixed seed column, rows sorted by (n, trial, algorithm).
    assert!(rows[0].starts_with("6,4,pavingDecision,0,11,"));
    assert!(rows[1].starts_with("6,4,pavingDecisionClassical,0,11,"));

    // Zero trials still writes the header.
    let out = matroidq(dir.path(), &["bench", "girth", "--n", "8", "--trials", "0", "-o", "empty.csv"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("empty.csv")).unwrap();
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn identical_command_lines_replay_byte_for_byte() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let args = ["bench", "girth", "--n", "6..9", "--trials", "6", "--seed", "23", "-o", "run.csv"];

    let out1 = matroidq(dir1.path(), &args);
    let out2 = matroidq(dir2.path(), &args);
    assert!(out1.status.success() && out2.status.success());

    let csv1 = std::fs::read(dir1.path().join("run.csv")).unwrap();
    let csv2 = std::fs::read(dir2.path().join("run.csv")).unwrap();
    assert_eq!(csv1, csv2, "same seed, same bytes");
    assert_eq!(out1.stdout, out2.stdout, "summary replays too");

    // Same seed through `check` replays the whole JSON record.
    let dir = dir1;
    write_fixtures(dir.path());
    let a = matroidq(dir.path(), &["check", "a1.matroid", "uniform", "--seed", "99"]);
    let b = matroidq(dir.path(), &["check", "a1.matroid", "uniform", "--seed", "99"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bound_prints_verified_tables_and_rejects_empty_ranges() {
    let dir = tempfile::tempdir().unwrap();

    let out = matroidq(dir.path(), &["bound", "uniformVsDeleted1", "--n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("4    2    6"), "row: {row}");
    assert!(row.trim_end().ends_with("true"), "exhaustive and closed form agree: {row}");

    // Odd sizes admit no half-size complement pairing: nothing to print.
    let out = matroidq(dir.path(), &["bound", "eulerianEven", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));

    // Beyond the exhaustive cap only the closed form is shown.
    let out = matroidq(dir.path(), &["bound", "pavingVsCounter", "--n", "9..10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().contains('-'));
}
