//! Command-line contract: exit codes, output determinism, usage errors.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catri"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes_are_0_1_2() {
    // 0: success / verified
    assert_eq!(run(&["identity", "I-rowsum"]).status.code(), Some(0));
    // 1: verification failure (the stated-domain escape hatch makes the
    // trapezoid identity fail on purpose beyond k = n+1)
    assert_eq!(
        run(&[
            "identity",
            "I-trap",
            "--unsafe-domain",
            "--m",
            "1..4",
            "--k",
            "1..6",
            "--n",
            "0..3"
        ])
        .status
        .code(),
        Some(1)
    );
    // 2: usage errors
    assert_eq!(
        run(&["triangle", "nope", "--rows", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["triangle", "trapezoid", "--rows", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["triangle", "k-analog", "-k", "0", "--rows", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["identity", "I-nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["identity", "I-rowsum", "--k", "1..3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["poly", "hk", "-k", "0", "-m", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["poly", "h"]).status.code(), Some(2));
    assert_eq!(
        run(&["series", "column", "--order", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["oeis", "A000000"]).status.code(), Some(2));
}

#[test]
fn empty_domain_sweep_is_a_success_with_skips() {
    // Every tuple with n = 0 is outside I-main1's domain: all skipped,
    // nothing checked, exit 0.
    let out = run(&["identity", "I-main1", "--n", "0..0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["checked"], 0);
    assert_eq!(v["skipped"], 42);
    assert_eq!(v["verified"], true);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        &["identity", "I-rowsum", "--format", "json"] as &[&str],
        &["identity", "I-k2diag", "--format", "json"],
        &["series", "q", "--order", "5", "--format", "json"],
        &["poly", "bq-tilde", "-s", "8", "--format", "json"],
        &["oeis", "A007179", "--format", "json"],
        &["conjecture", "--format", "json"],
        &[
            "triangle", "k-analog", "-k", "-2", "--rows", "7", "--format", "json",
        ],
    ] {
        let first = stdout_of(args);
        let second = stdout_of(args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
        serde_json::from_str::<serde_json::Value>(first.lines().next().unwrap())
            .expect("first line parses as JSON");
    }
}

#[test]
fn poly_rendering_matches_the_canonical_form() {
    assert_eq!(
        stdout_of(&["poly", "h", "-m", "5"]),
        "q^4 - 2*q^3 + 4*q^2 - 3*q + 1\n"
    );
    assert_eq!(
        stdout_of(&["poly", "j", "-m", "5"]),
        "q^4 + 2*q^3 + 4*q^2 + 3*q + 1\n"
    );
    assert_eq!(
        stdout_of(&["poly", "bq-tilde", "-s", "8"]),
        "4*q^6 + 9*q^4 + 7*q^2 + 1\n"
    );
    assert_eq!(stdout_of(&["poly", "bq-tilde", "-s", "2"]), "1\n");
    assert_eq!(
        stdout_of(&["poly", "l", "-l", "1", "--order", "8"]),
        "0, 0, 0, -1, -2, -3, -4, -5, -6\n"
    );
}

#[test]
fn series_q_json_lists_row_polynomials() {
    let text = stdout_of(&["series", "q", "--order", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 6);
    // x^5 coefficient is the m=5 row polynomial, ascending powers.
    let h5: Vec<&str> = coeffs[5]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert_eq!(h5, vec!["1", "-3", "4", "-2", "1"]);
}

#[test]
fn identity_list_covers_the_catalog() {
    let text = stdout_of(&["identity", "list"]);
    for id in ["I-main1", "I-trap", "I-Bsq", "I-km1diag"] {
        assert!(text.contains(id), "missing {id} in list output");
    }
    let json = stdout_of(&["identity", "list", "--format", "json"]);
    assert!(json.lines().count() >= 24);
    for line in json.lines() {
        serde_json::from_str::<serde_json::Value>(line).expect("each line is JSON");
    }
}

#[test]
fn identity_ac_sweep_example() {
    let out = run(&["identity", "I-AC", "--n", "1..30", "--k", "1..29"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn triangle_csv_row_per_line() {
    let text = stdout_of(&[
        "triangle",
        "alt-jacobsthal",
        "--rows",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(text, "1\n1,1\n1,0,1\n1,1,-1,1\n");
    let text = stdout_of(&[
        "triangle", "b-k", "-k", "2", "--rows", "4", "--format", "csv",
    ]);
    assert_eq!(text, "1\n1,1\n1,0,2\n1,-1,2,2\n");
}

#[test]
fn data_dir_override_is_honored() {
    // Point the loader at a doctored snapshot: the cross-check must fail,
    // proving the override takes precedence over the bundled data.
    let dir = std::env::temp_dir().join("catri-test-data");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("b007179.txt"), "1 1\n2 1\n3 4\n4 999\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_catri"))
        .args(["oeis", "A007179"])
        .env("CATRI_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "doctored data must fail");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("MISMATCH"), "got: {text}");
}
