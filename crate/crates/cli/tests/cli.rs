use std::process::{Command, Output};

use serde_json::Value;

fn cyder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyder"))
        .args(args)
        .env_remove("CYDER_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn table_csv_row_for_plain_derangements() {
    let out = cyder(&["table", "--r", "1", "--n", "0..6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1,1,0,1,2,9,44,265"));
}

#[test]
fn table_methods_agree() {
    let run = |m: &str| {
        stdout(&cyder(&[
            "table", "--r", "1..4", "--n", "0..6", "--method", m, "--format", "csv",
        ]))
    };
    let formula = run("formula");
    for m in ["two-term", "one-term"] {
        assert_eq!(run(m), formula, "{m}");
    }
}

#[test]
fn table_flags_the_single_published_discrepancy() {
    let out = cyder(&["table", "--compare-published", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let d = v["discrepancies"].as_array().unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0]["r"], 3);
    assert_eq!(d[0]["n"], 2);
    assert_eq!(d[0]["published"], "12");
    assert_eq!(d[0]["computed"], "13");
}

#[test]
fn poly_outputs() {
    let exc = cyder(&["poly", "--kind", "exc-derangement", "--r", "2", "--n", "3"]);
    assert_eq!(stdout(&exc).trim(), "8*q^2 + 20*q + 1");

    let qt = |extra: &[&str]| {
        let mut args = vec!["poly", "--kind", "qt-derangement", "--r", "2", "--n", "2"];
        args.extend_from_slice(extra);
        stdout(&cyder(&args)).trim().to_owned()
    };
    assert_eq!(qt(&[]), "q*t^2 + q*t + t^2 + q + t");
    assert_eq!(qt(&["--brute-force"]), qt(&[]));
    assert_eq!(
        stdout(&cyder(&[
            "poly",
            "--kind",
            "qt-derangement",
            "--r",
            "1",
            "--n",
            "0"
        ]))
        .trim(),
        "1"
    );
}

#[test]
fn poly_json_and_csv() {
    let v = json(&cyder(&[
        "poly",
        "--kind",
        "exc-derangement",
        "--r",
        "2",
        "--n",
        "3",
        "--format",
        "json",
    ]));
    assert_eq!(v["r"], 2);
    assert_eq!(v["n"], 3);
    let csv = stdout(&cyder(&[
        "poly",
        "--kind",
        "exc-derangement",
        "--r",
        "2",
        "--n",
        "3",
        "--format",
        "csv",
    ]));
    assert!(csv.lines().next().unwrap().starts_with("q,t,coefficient"));
    assert!(csv.contains("2,0,8"));
}

#[test]
fn verify_counts_passes_with_documented_discrepancy() {
    let out = cyder(&["verify", "--suite", "counts", "--r", "1..4", "--n", "0..6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pass"], true);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_all_default_grid() {
    let out = cyder(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_writes_the_report_file() {
    let path = std::env::temp_dir().join(format!("cyder-report-{}.json", std::process::id()));
    let out = cyder(&[
        "verify",
        "--suite",
        "qt",
        "--r",
        "2",
        "--n",
        "0..3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let file: Value = serde_json::from_slice(&written).unwrap();
    assert_eq!(file, json(&out));
}

#[test]
fn roots_of_a_derangement_polynomial() {
    let out = cyder(&["roots", "--r", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["real_roots"], 3);
    assert_eq!(v["verdicts"]["negative_distinct"], true);
}

#[test]
fn roots_failure_exits_one() {
    let out = cyder(&["roots", "--coeffs", "1,0,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["real_roots"], 0);
}

#[test]
fn dump_lists_every_derangement() {
    let out = cyder(&["dump", "--r", "2", "--n", "3", "--derangements"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 29);
    assert!(lines.iter().all(|l| l["element"].is_string()));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "--r", "5..1"][..],
        &["table", "--r", "0..2"],
        &["poly", "--kind", "eulerian", "--r", "0", "--n", "2"],
        &["table", "--method", "guess"],
        &["roots", "--coeffs", "1,2", "--r", "2"],
        &["verify", "--tolerance", "0"],
    ] {
        assert_eq!(cyder(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bound_from_environment_refuses_large_cells() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyder"))
        .args([
            "table",
            "--r",
            "3",
            "--n",
            "0..4",
            "--method",
            "brute-force",
            "--format",
            "csv",
        ])
        .env("CYDER_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3,1,2,refused,refused,refused"), "{text}");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--r", "1..3", "--n", "0..4"];
    assert_eq!(cyder(&args).stdout, cyder(&args).stdout);
    let dump = ["dump", "--r", "3", "--n", "3"];
    assert_eq!(cyder(&dump).stdout, cyder(&dump).stdout);
}
