use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borcherds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

/// Drops the `# config:` header line, which echoes `--threads`.
fn without_config(s: &str) -> String {
    s.lines()
        .filter(|l| !l.starts_with("# config:"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn exponents() {
    let o = run(&["exponents", "--d", "4", "--n", "3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for v in ["492", "143376", "51180012"] {
        assert!(s.contains(v), "{s}");
    }
    let doc = json(&["exponents", "--d", "3", "--n", "1"]);
    assert_eq!(doc["table"]["values"][0], "-248");
    assert_eq!(doc["meta"]["config"]["d"], 3);
    assert_eq!(doc["meta"]["tool"], "borcherds");
}

#[test]
fn invalid_discriminant_exits_2() {
    let o = run(&["exponents", "--d", "5", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a discriminant"));
}

#[test]
fn congruence_documents() {
    let doc = json(&["congruence", "--d", "4", "--ell", "11"]);
    assert_eq!(doc["formula"]["c0"], 6);
    assert_eq!(doc["formula"]["c"], serde_json::json!([9]));
    let doc = json(&[
        "congruence",
        "--d",
        "20",
        "--ell",
        "31",
        "--basis",
        "1*D^1E4^2E6^2 + 22*D^2E4^2",
        "--basis",
        "1*D^1E4^2E6^2 + 19*D^2E4^2",
    ]);
    assert_eq!(doc["formula"]["c0"], 2);
    assert_eq!(doc["formula"]["c"], serde_json::json!([14, 9]));
}

#[test]
fn ineligible_pair_exits_2() {
    let o = run(&["congruence", "--d", "4", "--ell", "13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("eligibility failed"));
    let o = run(&["congruence", "--d", "4", "--ell", "11", "--D", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["congruence", "--d", "4", "--ell", "11", "--basis", "D^2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_command() {
    let o = run(&["check", "--d", "4", "--ell", "11", "--n", "300"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("OK: 300 indices verified (27 skipped, ℓ|n)"));
}

#[test]
fn table2_and_supersingular() {
    let o = run(&["table2", "--ell", "11", "--dmax", "300"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for d in ["3", "4", "11", "12", "15", "20", "67", "115", "148", "267"] {
        assert!(
            s.split(|c: char| !c.is_ascii_digit()).any(|t| t == d),
            "{d} missing from {s}"
        );
    }
    let doc = json(&["supersingular", "--ell", "31"]);
    let c = doc["coefficients"].as_array().unwrap();
    assert_eq!(c.len(), 4);
    assert_eq!(c[3], 1);
}

#[test]
fn density_tables() {
    let o = run(&["density", "--d", "4", "--ell", "11", "--format", "csv"]);
    let s = stdout(&o);
    assert!(s.contains("\n8,119/1200,0.0992\n") && s.contains("\n10,109/1200,0.0908\n"));
    assert!(s.contains("\n0,9/100,0.0900\n"));
    let doc = json(&["density", "--d", "4", "--ell", "11", "--empirical", "10000"]);
    assert_eq!(doc["table"]["total"], 1229);
}

#[test]
fn output_is_independent_of_threads() {
    let base = [
        "density",
        "--d",
        "4",
        "--ell",
        "11",
        "--empirical",
        "50000",
        "--format",
        "csv",
    ];
    let one = run(&[&base[..], &["--threads", "1"]].concat());
    let four = run(&[&base[..], &["--threads", "4"]].concat());
    assert!(one.status.success() && four.status.success());
    assert_eq!(
        without_config(&stdout(&one)),
        without_config(&stdout(&four))
    );
}

#[test]
fn cache_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("out.json");
    let args = |o: &str| {
        vec![
            "classpoly".to_string(),
            "--d".into(),
            "20".into(),
            "--cache-dir".into(),
            cache.to_str().unwrap().into(),
            "--format".into(),
            "json".into(),
            "--out".into(),
            o.to_string(),
        ]
    };
    let first = Command::new(env!("CARGO_BIN_EXE_borcherds"))
        .args(args(out.to_str().unwrap()))
        .status()
        .unwrap();
    assert!(first.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["meta"]["cache_hits"], serde_json::json!([]));
    assert_eq!(doc["classpoly"]["components"][0]["coeffs"][1], "-1264000");
    let second = Command::new(env!("CARGO_BIN_EXE_borcherds"))
        .args(args(out.to_str().unwrap()))
        .status()
        .unwrap();
    assert!(second.success());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["meta"]["cache_hits"], serde_json::json!([20]));
}
