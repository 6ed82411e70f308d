use std::process::{Command, Output};

use num_bigint::BigInt;
use serde_json::Value;

fn apery(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apery"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn lines(args: &[&str]) -> Vec<String> {
    let o = apery(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).lines().map(String::from).collect()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&apery(&full))).expect("valid json")
}

#[test]
fn coeff_examples() {
    assert_eq!(
        lines(&["coeff", "--lambda", "2,2", "--alpha", "1", "--n", "1,1,1,1"]),
        ["5"]
    );
    assert_eq!(
        lines(&["coeff", "--lambda", "2,2", "--alpha", "1", "--n", "0,0,0,0"]),
        ["1"]
    );
    assert_eq!(
        lines(&["coeff", "--lambda", "3,1", "--n", "5,5,5,5"]),
        ["4009657"]
    );
    assert_eq!(
        lines(&["coeff", "--sequence", "askey-gasper", "--n", "1,1,1"]),
        ["2"]
    );
}

#[test]
fn diagonal_examples() {
    assert_eq!(
        lines(&["diagonal", "--lambda", "4", "--alpha", "-27", "--max", "3"]),
        ["1", "-3", "9", "-3"]
    );
    assert_eq!(
        lines(&["diagonal", "--lambda", "4", "--alpha", "-27", "--max", "0"]),
        ["1"]
    );
    assert_eq!(
        lines(&["diagonal", "--lambda", "2,2", "--alpha", "1", "--max", "2"]),
        ["1", "5", "73"]
    );
}

#[test]
fn expand_examples() {
    let t = json(&["expand", "--lambda", "2,1", "--bounds", "3"]);
    let entries = t["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 64);
    let e = entries
        .iter()
        .find(|e| e["n"] == serde_json::json!([1, 1, 1]))
        .unwrap();
    assert_eq!(e["c"], "3");

    let t = json(&["expand", "--lambda", "2,1", "--bounds", "0"]);
    assert_eq!(
        t["entries"],
        serde_json::json!([{"n": [0, 0, 0], "c": "1"}])
    );

    let t = json(&["expand", "--preset", "apery5", "--bounds", "4"]);
    let diag: Vec<&str> = t["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| {
            let n = e["n"].as_array().unwrap();
            n.iter().all(|v| v == &n[0])
        })
        .map(|e| e["c"].as_str().unwrap())
        .collect();
    assert_eq!(diag, ["1", "5", "73", "1445", "33001"]);
}

#[test]
fn expand_over_budget_is_a_usage_error() {
    let o = apery(&[
        "expand",
        "--preset",
        "scan",
        "--d",
        "4",
        "--bounds",
        "10",
        "--max-cells",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sequence_examples() {
    assert_eq!(
        lines(&["sequence", "--cubic", "17,5,1,0", "--max", "3"]),
        ["1", "5", "73", "1445"]
    );
    assert_eq!(
        lines(&["sequence", "--quadratic", "11,3,-1", "--max", "1"]),
        ["1", "3"]
    );
    assert_eq!(
        lines(&["sequence", "--cubic", "17,5,1,0", "--max", "0"]),
        ["1"]
    );
    assert_eq!(
        apery(&["sequence", "--cubic", "1,2,1,0", "--max", "3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn integers_round_trip_through_text() {
    let out = lines(&["diagonal", "--lambda", "2,2", "--max", "200"]);
    let last: BigInt = out.last().unwrap().parse().unwrap();
    assert_eq!(last.to_string(), *out.last().unwrap());
    assert!(last.to_string().len() > 300);
    let seq = lines(&["sequence", "--cubic", "17,5,1,0", "--max", "200"]);
    assert_eq!(out, seq);
}

#[test]
fn constant_terms_macmahon_and_eta() {
    assert_eq!(lines(&["ct", "--max", "2"]), ["1", "5", "73"]);
    assert_eq!(lines(&["ct", "--n", "1,1,1,1"]), ["5"]);
    let m = json(&["macmahon", "--n", "1,1,1,1"]);
    assert_eq!(m["series"], "5");
    assert_eq!(m["equal"], true);
    let m = json(&[
        "macmahon",
        "--matrix",
        "1,-1,-1;-1,1,-1;-1,-1,1",
        "--n",
        "1,1,1",
    ]);
    assert_eq!(m["equal"], true);
    let e = json(&["eta", "--order", "12"]);
    assert_eq!(e["equal"], true);
    assert_eq!(e["form"][0], "1");
    let p = json(&["eta", "--order", "7", "--factors", "1:1"]);
    assert_eq!(p["omitted_leading_power"], "1/24");
    assert_eq!(
        p["coeffs"],
        serde_json::json!(["1", "-1", "-1", "0", "0", "1", "0", "1"])
    );
}

#[test]
fn verify_exit_codes() {
    let ok = apery(&[
        "verify",
        "sc",
        "--lambda",
        "2,2",
        "--alpha",
        "1",
        "--primes",
        "5,7",
        "--r",
        "1",
        "--exponent",
        "3",
        "--seed",
        "42",
    ]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = apery(&[
        "verify",
        "sc",
        "--lambda",
        "3,1",
        "--n",
        "1,1,1,1",
        "--primes",
        "5",
        "--exponent",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(report["cells"][0]["defect_valuation"], 2);
    assert_eq!(report["cells"][0]["lhs"], "4009657");

    assert_eq!(
        apery(&["verify", "powersum", "--primes", "5", "--r", "0"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        apery(&["verify", "sc", "--lambda", "2,2", "--primes", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(apery(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        apery(&["coeff", "--lambda", "1,1", "--n", "-1,2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conjecture_failures_need_strict() {
    // scan-b reports conjecture support; most b fail at d=5.
    let args = [
        "verify",
        "scan-b",
        "--d",
        "5",
        "--b-range",
        "-3,3",
        "--exclude-zero",
        "--primes",
        "5",
    ];
    assert_eq!(apery(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    assert_eq!(apery(&strict).status.code(), Some(1));
}

#[test]
fn verify_subcommands_pass() {
    for args in [
        &["verify", "conjecture-g", "--primes", "5", "--samples", "5"][..],
        &["verify", "conjecture-z", "--n", "1,1,1,1", "--primes", "5"],
        &[
            "verify", "dwork", "--max", "4", "--primes", "2,3", "--r", "1,2",
        ],
        &["verify", "lucas", "--primes", "2,3,5"],
        &[
            "verify",
            "jacobsthal",
            "--a",
            "2",
            "--b",
            "1",
            "--primes",
            "2,5",
        ],
        &["verify", "jacobsthal", "--primes", "2,3,5,7,11"],
        &[
            "verify",
            "ljunggren",
            "--a",
            "7",
            "--b",
            "3",
            "--primes",
            "7",
        ],
        &[
            "verify", "lemma53", "--lambda", "2,1", "--n", "2,-1,3", "--k", "0", "--primes", "7",
        ],
        &[
            "verify", "lemma54", "--m", "-2", "--k", "-4", "--primes", "3", "--r", "2",
        ],
        &[
            "verify", "lemma55", "--m1", "-1", "--m2", "2", "--k", "-3", "--primes", "7",
        ],
        &["verify", "reflect"],
        &["verify", "identity25"],
        &[
            "verify",
            "scan-b",
            "--d",
            "3",
            "--b-range",
            "0,4",
            "--primes",
            "5",
            "--exponent",
            "3",
        ],
        &[
            "verify",
            "suite",
            "--samples",
            "4",
            "--only",
            "reflect,counterexamples",
        ],
    ] {
        let o = apery(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn suite_reports_are_byte_identical() {
    let dir = std::env::temp_dir();
    let a = dir.join(format!("apery-suite-a-{}.json", std::process::id()));
    let b = dir.join(format!("apery-suite-b-{}.json", std::process::id()));
    for path in [&a, &b] {
        let o = apery(&[
            "verify",
            "suite",
            "--seed",
            "7",
            "--samples",
            "5",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["outcome"]["theorem_failures"], 0);
    assert_eq!(v["outcome"]["counterexamples_reproduced"], true);
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn csv_output_has_header_and_rows() {
    let o = apery(&["verify", "reflect", "--max", "2", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(
        rows[0],
        "claim,params,lhs,rhs,modulus,holds,defect_valuation,report"
    );
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("reflect-a,"));
}
