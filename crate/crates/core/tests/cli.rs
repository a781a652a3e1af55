use std::process::{Command, Output};

use serde_json::Value;

/// Runs the binary; `args` is split on whitespace, so expressions are written without spaces.
fn artin_lab(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin-lab"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn json(args: &str) -> Value {
    let out = artin_lab(args);
    assert!(
        out.status.success(),
        "{args} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn ar_index_principal_ideal() {
    let v = json("ar-index --vars T1,T2 --char 0 --trunc 8 --ideal T1");
    assert_eq!(v["result"]["i0"], 1);
    assert_eq!(v["result"]["certified_up_to"], 7);
    assert_eq!(v["certified_up_to"], 7);
    assert_eq!(v["ring"]["vars"], serde_json::json!(["T1", "T2"]));
}

#[test]
fn witness_level_two() {
    let v = json("witness --i 2 --trunc 6");
    assert_eq!(v["result"]["residual"], "T3^4");
    assert_eq!(v["result"]["residual_order"], 4);
}

#[test]
fn witness_default_truncation_is_i_squared() {
    let v = json("witness --i 3");
    assert_eq!(v["ring"]["trunc"], 9);
    assert_eq!(v["result"]["residual"], "T3^9");
}

#[test]
fn bound_lem66() {
    let v = json("bound --formula lem66 --n 2 --iI 1 --c 0 --i 4");
    assert_eq!(v["result"]["value"], 6);
}

#[test]
fn every_subcommand_produces_a_report() {
    let cases = [
        "ord --poly T1^2*T2+3*T3",
        "nu --vars T1,T2 --ideal T1^2-T2^3 --x T1^2",
        "nubar --vars T1,T2 --trunc 12 --ideal T1^2-T2^3 --x T1",
        "ar-index --vars T1,T2 --module (T1,0);(0,T2)",
        "icl-scan --vars T1,T2 --ideal T1*T2 --deg-max 2 --samples 4",
        "valcheck --vars T1,T2 --char 2 --trunc 4 --ideal T1^2+T2^3 --sampling exhaustive",
        "solve-linreg --vars T1,T2 --f T1,T2^2 --x T2^2,-T1+T1^5 --i 3",
        "solve-fxhy --vars T1,T2 --trunc 9 --k 2 --f T1^2+T2^3 --h T1 --x T1+T1^4 --y -T1^2-T2^3 --i 3",
        "stable-ar --vars T1,T2 --trunc 6 --ideal T1^2+T2^3 --xs T1,T2",
        "beta-lb --vars T1,T2 --char 2 --trunc 5 --unknowns X1 --eqs T1*X1 --i 0,1",
        "witness --i 2 --primes 2",
        "irr-check --i 2 --p 2",
        "bound --formula cor48_artin --max-ord 2 --i 5",
        "cross-check --formula lin31 --iI 1 --points 0:1,1:2,2:3",
    ];
    for args in cases {
        let v = json(args);
        assert_eq!(v["command"], args.split(' ').next().unwrap());
        for key in [
            "command",
            "ring",
            "params",
            "result",
            "certified_up_to",
            "seed",
            "warnings",
        ] {
            assert!(v.get(key).is_some(), "{key} missing for {args}");
        }
    }
}

#[test]
fn solver_reports_hold() {
    let v = json("solve-linreg --vars T1,T2 --f T1,T2^2 --x T2^2,-T1+T1^5 --i 3");
    assert_eq!(v["result"]["output"], serde_json::json!(["T2^2", "-T1"]));
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = "icl-scan --vars T1,T2 --trunc 8 --ideal T1^2+T2^3 --deg-max 3 --samples 24 --envelope --seed";
    let a = artin_lab(&format!("{args} 11"));
    let b = artin_lab(&format!("{args} 11"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["result"]["b_min"], 1);

    let c = json(&format!("{args} 12"));
    assert_eq!(c["seed"], 12);
}

#[test]
fn precondition_errors_exit_two() {
    let out = artin_lab("bound --formula lem66 --n 2 --i 4");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("iI"));

    assert_eq!(artin_lab("ord --poly T1+T9").status.code(), Some(2));
    assert_eq!(artin_lab("ord --char 4 --poly T1").status.code(), Some(2));
    assert_eq!(artin_lab("ord --poly T1^-1").status.code(), Some(2));

    let out = artin_lab("witness --i 3 --trunc 8");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncation too small"));
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = artin_lab("irr-check --i 3 --p 3 --budget 1000");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn csv_output_and_out_file() {
    let dir = std::env::temp_dir().join(format!("artin-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("levels.csv");
    let out = artin_lab(&format!(
        "ar-index --vars T1,T2 --trunc 5 --ideal T1^2 --format csv --out {}",
        path.display()
    ));
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,k_i,i_minus_k"));
    assert_eq!(lines.last(), Some("3,1,2"));
    std::fs::remove_dir_all(&dir).unwrap();
}
