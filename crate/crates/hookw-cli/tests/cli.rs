//! End-to-end tests of the `hookw` command line.

use hookw::exact::{parse_ratfunc, BigRat};
use hookw_cli::{parse_rational, run};
use serde_json::Value;
use std::process::Command;

/// Runs the in-process entry point and returns (status, stdout, stderr).
fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hookw").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn call_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).expect("valid JSON")
}

fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn charge_example_matches_golden() {
    let v = call_json(&[
        "charge", "--family", "2B", "--n", "1", "--m", "1", "--psi", "1",
    ]);
    assert_eq!(v["c"], "-25/2");
    assert_eq!(v, fixture("charge_2B_1_1_psi1.json"));
}

#[test]
fn charge_table_shows_value() {
    let (code, out, _) = call(&[
        "charge", "--family", "2B", "--n", "1", "--m", "1", "--psi", "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "c: -25/2"), "{out}");
}

#[test]
fn trialities_example_exits_zero() {
    let (code, _, err) = call(&["verify", "trialities", "--sweep", "n=0..3,m=0..3"]);
    assert_eq!(code, 0, "{err}");
    let v = call_json(&["verify", "trialities", "--sweep", "n=0..3,m=0..3"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v, fixture("trialities_0_3.json"));
}

#[test]
fn rational_points_example_contains_eighth() {
    let v = call_json(&[
        "rational-points",
        "--family",
        "2B",
        "--n",
        "0",
        "--m",
        "1",
        "--r",
        "1..3",
    ]);
    let items = v.as_array().unwrap();
    let hit = items
        .iter()
        .find(|w| w["psi"] == "1/8")
        .expect("witness at psi = 1/8");
    assert_eq!(hit, &fixture("witness_2B_0_1_r1.json"));
    assert!(items.iter().all(|w| w["status"] == "certified"));
}

#[test]
fn conjectural_points_only_on_request() {
    let base = [
        "rational-points",
        "--family",
        "2B",
        "--n",
        "0",
        "--m",
        "1",
        "--r",
        "1..2",
    ];
    let plain = call_json(&base);
    let mut args = base.to_vec();
    args.push("--include-conjectural");
    let all = call_json(&args);
    assert!(all.as_array().unwrap().len() >= plain.as_array().unwrap().len());
    assert!(plain
        .as_array()
        .unwrap()
        .iter()
        .all(|w| w["status"] != "conjectural"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["charge", "--family", "3X", "--n", "1", "--m", "1"],
        vec![
            "charge", "--family", "2B", "--n", "1", "--m", "1", "--psi", "1/0",
        ],
        vec!["verify", "trialities", "--sweep", "q=0..2"],
        vec!["verify", "trialities", "--sweep", "n=3..1"],
        vec![
            "verify",
            "coincidences",
            "--sweep",
            "n=0..50,m=0..50,r=1..50",
            "--max-points",
            "100",
        ],
        vec!["intersect", "--first", "2B(0,1", "--second", "sp:1"],
        vec!["intersect", "--first", "2B(0,1)", "--second", "so_even:1"],
        vec!["gt-factors", "--series", "C", "--n", "0", "--k", "1"],
        vec!["no-such-command"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn pole_is_an_input_error() {
    // psi = 1/2 is a pole of the 2B(1,1) central charge.
    let (code, _, err) = call(&[
        "charge", "--family", "2B", "--n", "1", "--m", "1", "--psi", "1/2",
    ]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("rational-points"));
}

#[test]
fn parse_rational_accepts_exact_forms() {
    assert_eq!(
        parse_rational("3/10").unwrap(),
        BigRat::new(3.into(), 10.into())
    );
    assert_eq!(
        parse_rational("-11/8").unwrap(),
        BigRat::new((-11).into(), 8.into())
    );
    assert_eq!(
        parse_rational("6/4").unwrap(),
        BigRat::new(3.into(), 2.into())
    );
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("0.5").is_err());
    assert!(parse_rational("x").is_err());
}

#[test]
fn symbolic_curve_strings_round_trip() {
    let v = call_json(&["curve", "--family", "2B", "--n", "n", "--m", "m"]);
    for key in ["c", "lambda"] {
        let text = v[key].as_str().unwrap();
        let parsed = parse_ratfunc(text).unwrap();
        assert_eq!(parsed.to_string(), text);
    }
}

#[test]
fn curve_point_agrees_with_charge() {
    let point = call_json(&[
        "curve", "--family", "1C", "--n", "1", "--m", "2", "--psi", "3/10",
    ]);
    let charge = call_json(&[
        "charge", "--family", "1C", "--n", "1", "--m", "2", "--psi", "3/10",
    ]);
    assert_eq!(point["c"], charge["c"]);
}

#[test]
fn table_and_json_carry_the_same_scalars() {
    let args = ["describe", "--family", "2C", "--n", "1", "--m", "2"];
    let v = call_json(&args);
    let (_, table, _) = call(&args);
    for (key, value) in v.as_object().unwrap() {
        let text = match value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        assert!(
            table.contains(&format!("{key}: {text}")),
            "{key} missing in\n{table}"
        );
    }
}

#[test]
fn intersection_of_example_pair() {
    let v = call_json(&["intersect", "--first", "2B(0,1)", "--second", "sp:1"]);
    let psis: Vec<&str> = v["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["psi1"].as_str().unwrap())
        .collect();
    assert!(psis.contains(&"1/8"));
}

#[test]
fn sing_example_agrees() {
    let v = call_json(&[
        "sing", "--kind", "sp", "--object", "affine", "--n", "2", "--u", "5", "--v", "3",
    ]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["general"], v["closed"]);
}

#[test]
fn suites_pass_on_small_sweeps() {
    for args in [
        vec!["verify", "charges"],
        vec!["verify", "singular"],
        vec![
            "verify",
            "coincidences",
            "--sweep",
            "n=0..1,m=0..1,r=1..2",
            "--source",
            "2B",
        ],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
    }
}

#[test]
fn gt_factor_curves_pass() {
    let v = call_json(&["gt-factors", "--series", "B", "--n", "2", "--k", "3"]);
    let factors = v["factors"].as_array().unwrap();
    assert_eq!(factors.len(), 4);
    assert!(factors.iter().all(|f| f["curve_check"] != "fail"));
}

#[test]
fn invalid_worker_count_is_rejected() {
    let out = Command::new(env!("CARGO_BIN_EXE_hookw"))
        .args(["verify", "charges"])
        .env(hookw_cli::WORKERS_ENV, "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binary_runs_example() {
    let out = Command::new(env!("CARGO_BIN_EXE_hookw"))
        .args([
            "charge", "--family", "2B", "--n", "1", "--m", "1", "--psi", "1", "--json",
        ])
        .env(hookw_cli::WORKERS_ENV, "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["c"], "-25/2");
}

#[test]
fn failed_verification_exits_one() {
    let outcome = hookw_cli::Outcome {
        value: serde_json::json!({"suite": "demo", "failed": 1}),
        failed: true,
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(hookw_cli::emit(&outcome, true, &mut out, &mut err), 1);
    assert!(String::from_utf8(err)
        .unwrap()
        .contains("verification failed"));
    let passed = hookw_cli::Outcome {
        failed: false,
        ..outcome
    };
    assert_eq!(
        hookw_cli::emit(&passed, false, &mut out, &mut Vec::new()),
        0
    );
}
