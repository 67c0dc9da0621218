use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn psolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_psolab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_stats(args: &[&str]) -> Value {
    let mut full = vec!["stats", "--format", "json"];
    full.extend_from_slice(args);
    let o = psolab(&full);
    assert!(o.status.success(), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn run_all_variants_writes_120_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let o = psolab(&[
        "run",
        "--variant",
        "all",
        "--seed",
        "42",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "variant,run,seed,evaluations,best_fitness,success,runtime_ms"
    );
    assert_eq!(lines.len(), 121);
    let summary = stdout(&o);
    assert!(summary.contains("success threshold 0.001"));
    assert!(summary.contains("seed 42"));
    for v in ["RS", "RA", "SS", "SA"] {
        assert_eq!(
            lines
                .iter()
                .filter(|l| l.starts_with(&format!("{v},")))
                .count(),
            30
        );
    }
}

#[test]
fn run_is_reproducible_apart_from_runtime() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |p: &Path| -> Vec<String> {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = psolab(&[
            "run",
            "--variant",
            "ss",
            "--runs",
            "2",
            "--seed",
            "7",
            "--out",
            path_str(p),
        ]);
        assert!(o.status.success());
    }
    let (ra, rb) = (strip(&a), strip(&b));
    assert_eq!(ra.len(), 3);
    assert_eq!(ra, rb);
}

#[test]
fn run_without_seed_echoes_one() {
    let o = psolab(&["run", "--variant", "sa", "--runs", "1"]);
    assert!(o.status.success());
    assert!(stderr(&o).starts_with("seed "));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn constriction_domain_is_a_usage_error() {
    let o = psolab(&["run", "--phi1", "2.0", "--phi2", "2.0", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("phi1 + phi2 > 4"), "{}", stderr(&o));
}

#[test]
fn model_constraints_are_usage_errors() {
    let o = psolab(&["run", "--model", "cognition", "--phi1", "0", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psolab(&["run", "--objective", "rastrigin", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psolab(&["run", "--variant", "xx"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn other_models_run_with_their_defaults() {
    for model in ["cognition", "social", "selfless"] {
        let o = psolab(&[
            "run",
            "--model",
            model,
            "--variant",
            "ra",
            "--runs",
            "2",
            "--seed",
            "3",
        ]);
        assert!(o.status.success(), "{model}: {}", stderr(&o));
    }
}

#[test]
fn unwritable_output_is_io_error() {
    let o = psolab(&[
        "run",
        "--runs",
        "1",
        "--seed",
        "1",
        "--out",
        "/nonexistent/dir/r.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = psolab(&["fixture", "--out", "/nonexistent/dir/f.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stats_fixture_anova() {
    let v = json_stats(&["--fixture", "--anova"]);
    let a = &v["anova"];
    assert!((a["f_stat"].as_f64().unwrap() - 0.67).abs() < 0.02);
    assert!((a["p_value"].as_f64().unwrap() - 0.57).abs() < 0.02);
    assert_eq!(a["df_within"], 116);
    assert_eq!(a["groups"][0]["label"], "RS");
}

#[test]
fn stats_fixture_ttest() {
    let v = json_stats(&["--fixture", "--ttest", "SS,SA"]);
    assert!(v.get("anova").is_none());
    let c = &v["comparisons"][0];
    assert_eq!(c["f_test"]["equal_variances"], true);
    assert_eq!(c["t_test"]["kind"], "pooled");
    assert!((c["t_test"]["t_stat"].as_f64().unwrap() + 1.305).abs() < 1e-3);
    assert_eq!(c["t_test"]["decision"], "accept_null");

    let text = psolab(&["stats", "--fixture", "--ttest", "SS,SA"]);
    assert!(stdout(&text).contains("t-Test: Two-Sample Assuming Equal Variances"));
}

#[test]
fn stats_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    let o = psolab(&["stats", "--input", path_str(&empty), "--anova"]);
    assert_eq!(o.status.code(), Some(1));

    let header_only = dir.path().join("header.csv");
    std::fs::write(
        &header_only,
        "variant,run,seed,evaluations,best_fitness,success,runtime_ms\n",
    )
    .unwrap();
    let o = psolab(&["stats", "--input", path_str(&header_only), "--anova"]);
    assert_eq!(o.status.code(), Some(1));

    let bad = dir.path().join("bad.csv");
    std::fs::write(
        &bad,
        "variant,run,seed,evaluations,best_fitness,success,runtime_ms\nRS,0,1,12,0,1,0\nRS,1,1,x,0,1,0\n",
    )
    .unwrap();
    let o = psolab(&["stats", "--input", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = psolab(&[
        "stats",
        "--input",
        path_str(&dir.path().join("missing.csv")),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stats_usage_errors() {
    let o = psolab(&["stats", "--fixture", "--ttest", "SS,XX"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psolab(&["stats", "--fixture", "--ttest", "SS"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psolab(&["stats", "--anova"]);
    assert_eq!(o.status.code(), Some(2));
    let o = psolab(&["stats", "--fixture", "--alpha", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixture_round_trips_through_stats() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("fixture.csv");
    let o = psolab(&["fixture", "--out", path_str(&f)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&f).unwrap();
    assert_eq!(text.lines().count(), 121);
    let rs_exhausted = text
        .lines()
        .filter(|l| l.starts_with("RS,") && l.split(',').nth(3) == Some("4000"))
        .count();
    assert_eq!(rs_exhausted, 12);

    let args = ["--anova", "--ttest", "RS,SS", "--ttest", "SS,SA"];
    let mut from_file = vec!["stats", "--input", path_str(&f)];
    from_file.extend_from_slice(&args);
    let mut embedded = vec!["stats", "--fixture"];
    embedded.extend_from_slice(&args);
    assert_eq!(stdout(&psolab(&from_file)), stdout(&psolab(&embedded)));
}

#[test]
fn run_output_feeds_stats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.csv");
    let o = psolab(&[
        "run",
        "--runs",
        "5",
        "--seed",
        "11",
        "--out",
        path_str(&out),
    ]);
    assert!(o.status.success());
    let v = json_stats(&["--input", path_str(&out), "--anova"]);
    assert_eq!(v["anova"]["df_between"], 3);
    assert_eq!(v["anova"]["df_within"], 16);
}
