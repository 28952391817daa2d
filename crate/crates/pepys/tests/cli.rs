//! End-to-end tests of the `pepys` binary: golden outputs, formats, exit
//! codes, and the enumeration-cap environment override.

use std::process::{Command, Output};

fn pepys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pepys"))
        .args(args)
        .env_remove("PEPYS_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn pepys_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pepys"))
        .args(args)
        .env_remove("PEPYS_ENUM_CAP")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn solve_prints_the_golden_fraction_and_decimal() {
    let out = pepys(&["solve", "--dice", "6", "--threshold", "1", "--prob", "1/6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("31031/46656"), "{text}");
    assert!(text.contains("0.665"), "{text}");

    let out = pepys(&["solve", "--dice", "12", "--threshold", "2", "--prob", "1/6"]);
    let text = stdout(&out);
    assert!(text.contains("1346704211/2176782336"), "{text}");
    assert!(text.contains("0.619"), "{text}");

    let out = pepys(&["solve", "--dice", "1", "--threshold", "0", "--prob", "1/6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("= 1\n"), "{text}");
}

#[test]
fn plain_output_is_a_projection_of_the_json_report() {
    let args = ["solve", "--dice", "6", "--threshold", "1"];
    let plain = stdout(&pepys(&args));
    let json_out = stdout(&pepys(&[&args[..], &["--format", "json"]].concat()));
    let doc: serde_json::Value = serde_json::from_str(&json_out).expect("valid json");

    assert_eq!(doc["command"], "solve");
    assert_eq!(doc["inputs"]["dice"], 6);
    assert_eq!(doc["results"]["probability"], "31031/46656");
    assert_eq!(doc["results"]["decimal"], "0.665");
    // Every headline number in the plain text is present in the JSON.
    assert!(plain.contains("31031/46656"));
    assert!(plain.contains("0.665"));
    assert_eq!(doc["results"]["integer_mean_check"]["upper_ge_half"], true);
}

#[test]
fn sequence_handles_single_terms_and_reversals() {
    let out = pepys(&["sequence", "--unit", "1", "--kmax", "1", "--prob", "1/2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("1/2"), "{text}");
    assert!(text.contains("n/a"), "{text}");

    let out = pepys(&[
        "sequence", "--unit", "6", "--kmax", "2", "--prob", "1/4", "--digits", "4",
    ]);
    let text = stdout(&out);
    assert!(text.contains("0.8220"), "{text}");
    assert!(text.contains("0.8416"), "{text}");
    assert!(text.contains("ranking: k=2 > k=1"), "{text}");
    assert!(text.contains("strictly decreasing: no"), "{text}");

    let out = pepys(&["sequence", "--unit", "6", "--kmax", "3", "--prob", "1/6"]);
    let text = stdout(&out);
    assert!(text.contains("ranking: k=1 > k=2 > k=3"), "{text}");
    assert!(text.contains("strictly decreasing: yes"), "{text}");
}

#[test]
fn sequence_grid_csv_has_one_row_per_point() {
    let out = pepys(&[
        "sequence", "--unit", "6", "--kmax", "2", "--grid", "1/6,1/4", "--digits", "4",
        "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "p,k,dice,threshold,probability,decimal,rank");
    assert_eq!(lines.len(), 5, "{text}");
    assert!(lines[1].starts_with("1/6,1,"), "{text}");
    assert!(lines[4].contains("0.8416"), "{text}");
}

#[test]
fn approx_renders_the_chained_two_digit_values() {
    for (dice, expected) in [("6", "0.67"), ("12", "0.62"), ("18", "0.60")] {
        let out = pepys(&["approx", "--dice", dice, "--prob", "1/6"]);
        assert_eq!(exit_code(&out), 0);
        let text = stdout(&out);
        assert!(
            text.contains(&format!("chained at 2 digits = {expected}")),
            "{text}"
        );
    }
}

#[test]
fn approx_rejects_fractional_means_with_exit_3() {
    let out = pepys(&["approx", "--dice", "7", "--prob", "1/6"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("not an integer"));
}

#[test]
fn median_reports_the_summary() {
    let out = pepys(&["median", "--dice", "7", "--prob", "1/6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("mean    = 7/6"), "{text}");
    assert!(text.contains("median  = 1"), "{text}");
    assert!(text.contains("gap below bound"), "{text}");
}

#[test]
fn argument_prints_the_two_share_renderings() {
    let out = pepys(&["argument", "--prob", "1/6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("12281/31031"), "{text}");
    assert!(text.contains("0.40"), "{text}");
    assert!(text.contains("383781250/1346704211"), "{text}");
    assert!(text.contains("0.28"), "{text}");
}

#[test]
fn crossover_reports_a_narrow_bracket() {
    let out = pepys(&["crossover", "--k1", "1", "--k2", "2", "--unit", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("midpoint ~= 0.21598726"), "{text}");
}

#[test]
fn simulate_is_deterministic_for_a_pinned_seed() {
    let args = [
        "simulate", "--prob", "1/6", "--trials", "20000", "--seed", "7", "--format", "json",
    ];
    let first = stdout(&pepys(&args));
    let second = stdout(&pepys(&args));
    assert_eq!(first, second);
    let doc: serde_json::Value = serde_json::from_str(&first).expect("valid json");
    assert_eq!(doc["results"]["report"]["generator_id"], "chacha8");
    assert_eq!(doc["results"]["report"]["trials"], 20000);
    assert_eq!(doc["results"]["exact"]["peter_win"], "31031/46656");
}

#[test]
fn oracle_matches_the_formula_and_honors_the_cap() {
    let out = pepys(&[
        "oracle", "--dice", "6", "--faces", "6", "--success-faces", "1", "--threshold", "1",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("31031/46656"), "{text}");
    assert!(text.contains("matches binomial formula: yes"), "{text}");

    // Default cap refuses the twelve-dice space and names the outcome count.
    let out = pepys(&[
        "oracle", "--dice", "12", "--faces", "6", "--success-faces", "1", "--threshold", "2",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("2176782336"), "{}", stderr(&out));

    // The environment variable lowers the cap...
    let out = pepys_with_env(
        &["oracle", "--dice", "6", "--faces", "6", "--success-faces", "1", "--threshold", "1"],
        "PEPYS_ENUM_CAP",
        "100",
    );
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("46656"), "{}", stderr(&out));

    // ...and the flag overrides the environment.
    let out = pepys_with_env(
        &[
            "oracle", "--dice", "6", "--faces", "6", "--success-faces", "1", "--threshold", "1",
            "--enum-cap", "50000",
        ],
        "PEPYS_ENUM_CAP",
        "100",
    );
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &[] as &[&str],
        &["frobnicate"],
        &["solve"],
        &["solve", "--dice", "6", "--threshold", "one"],
        &["solve", "--dice", "6", "--threshold", "1", "--prob", "7/6"],
        &["solve", "--dice", "6", "--threshold", "1", "--bogus", "1"],
        &["solve", "--dice", "0", "--threshold", "1"],
        &["sequence", "--grid", "1/6", "--prob", "1/4"],
        &["median", "--dice", "7", "--digits", "0"],
    ] {
        let out = pepys(args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
        assert!(!stderr(&out).is_empty(), "args: {args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = pepys(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("Usage: pepys"));
}

#[test]
fn csv_scalar_commands_have_a_header_row() {
    let out = pepys(&["solve", "--dice", "6", "--threshold", "1", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "dice,threshold,prob,probability,decimal");
    assert_eq!(lines[1], "6,1,1/6,31031/46656,0.665");

    let out = pepys(&["simulate", "--trials", "1000", "--seed", "3", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("quantity,estimate,std_error,exact\n"), "{text}");
    assert_eq!(text.lines().count(), 5, "{text}");
}

#[test]
fn json_reports_share_a_stable_envelope() {
    for args in [
        &["median", "--dice", "6", "--format", "json"] as &[&str],
        &["crossover", "--format", "json"],
        &["argument", "--format", "json"],
        &["approx", "--dice", "6", "--format", "json"],
        &["oracle", "--dice", "2", "--faces", "2", "--success-faces", "1", "--threshold", "2",
          "--format", "json"],
    ] {
        let out = pepys(args);
        assert_eq!(exit_code(&out), 0, "args: {args:?}");
        let doc: serde_json::Value =
            serde_json::from_str(&stdout(&out)).unwrap_or_else(|_| panic!("bad json: {args:?}"));
        assert!(doc["command"].is_string(), "args: {args:?}");
        assert!(doc["inputs"].is_object(), "args: {args:?}");
        assert!(doc["results"].is_object(), "args: {args:?}");
    }
}
