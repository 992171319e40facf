//! Acceptance battery: one printed pass/fail line per criterion.
//!
//! Criteria 1–7 are the items of the library's reproduction battery
//! (`suite::paper_suite`); criterion 8 exercises the installed binary and
//! checks that JSON reports are byte-identical across runs with the same seed.

use std::process::Command;

use ambitrace::decomp::DEFAULT_SEED;
use ambitrace::suite::paper_suite;

fn report(criterion: usize, label: &str, pass: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {label}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

#[test]
fn acceptance() {
    let outcomes = paper_suite(DEFAULT_SEED);
    let expected_keys = [
        "cyclic-two",
        "cyclic-odd",
        "klein-gf4",
        "sl2-p5",
        "trace-properties",
        "ribbon-identities",
        "weight-combinatorics",
    ];
    assert_eq!(
        outcomes.iter().map(|o| o.key).collect::<Vec<_>>(),
        expected_keys,
        "battery items out of order"
    );
    let mut all_pass = true;
    for (i, o) in outcomes.iter().enumerate() {
        report(i + 1, o.key, o.pass, &o.detail);
        all_pass &= o.pass;
    }

    let cli_pass = check_cli();
    report(
        8,
        "cli",
        cli_pass,
        "suite pass-table, deterministic JSON, contract examples",
    );
    assert!(all_pass && cli_pass, "one or more criteria failed");
}

fn run_bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ambitrace"))
        .args(args)
        .env_remove("AMBITRACE_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
    )
}

fn check_cli() -> bool {
    let mut ok = true;
    let mut expect = |cond: bool, what: &str| {
        if !cond {
            println!("  cli sub-check failed: {what}");
            ok = false;
        }
    };

    // Full battery via the binary: pass table, exit 0, byte-identical JSON.
    let suite_args = ["--paper-suite", "--output", "json", "--seed", "12345"];
    let (code1, json1) = run_bin(&suite_args);
    let (code2, json2) = run_bin(&suite_args);
    expect(code1 == 0 && code2 == 0, "--paper-suite exits 0");
    expect(json1 == json2, "JSON byte-identical across equal-seed runs");
    expect(
        json1.contains("\"pass\":true") && json1.contains("cyclic-two"),
        "suite JSON carries keyed pass entries",
    );

    // Contract examples.
    let (code, text) = run_bin(&[
        "ambi", "--category", "cyclic", "--p", "2", "--module", "V2",
    ]);
    expect(
        code == 0 && text.contains("not-ambidextrous") && text.contains("witness"),
        "regular module of the order-two group is reported not-ambidextrous with a witness",
    );
    let (code, text) = run_bin(&[
        "moddim", "--category", "klein", "--field", "gf4", "--J", "V(1,a)", "--V", "V(2,a)",
    ]);
    expect(
        code == 0 && text.trim() == "0",
        "relative dimension of the length-two Klein module vanishes",
    );
    let (code, text) = run_bin(&["superk-dim", "--mn", "1,1", "--lambda", "1|0"]);
    expect(code == 0 && text.trim() == "1", "typical gl(1|1) dimension is 1");

    // Exit-code contract: usage error 1, domain error 2 with an error object.
    let (code, _) = run_bin(&["no-such-verb"]);
    expect(code == 1, "unknown subcommand exits 1");
    let (code, text) = run_bin(&["superk-dim", "--lambda", "1,0|0"]);
    expect(
        code == 2 && text.contains("\"error\""),
        "atypical weight yields exit 2 and a machine-readable error object",
    );
    ok
}
