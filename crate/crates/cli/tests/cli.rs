use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ssideals(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn lines_ok(args: &[&str]) -> Vec<String> {
    let out = ssideals(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out).lines().map(String::from).collect()
}

#[test]
fn hp_text_output_lists_ideals_then_count() {
    let lines = lines_ok(&["enumerate-hp", "--vars", "5", "--poly", "3/2*z^2+5/2*z"]);
    assert_eq!(
        lines,
        [
            "(x0, x1^4, x1^3*x2^2, x1^3*x2*x3)",
            "(x0^2, x0*x1, x0*x2, x0*x3, x1^4, x1^3*x2)",
            "count=2",
        ]
    );
}

#[test]
fn input_forms_agree() {
    for input in [
        ["--poly", "z^2+5z+3"],
        ["--coeffs", "3,5,1"],
        ["--gotzmann", "13,5,2"],
    ] {
        let mut args = vec!["enumerate-hp", "--vars", "5", "--count-only"];
        args.extend(input);
        assert_eq!(lines_ok(&args), ["509"], "{input:?}");
    }
}

#[test]
fn large_constant_count() {
    let lines = lines_ok(&[
        "enumerate-hp",
        "--vars",
        "13",
        "--gotzmann",
        "24",
        "--count-only",
    ]);
    assert_eq!(lines, ["15425"]);
}

#[test]
fn almost_lex_and_max_betti() {
    let lines = lines_ok(&[
        "enumerate-almost-lex",
        "--vars",
        "5",
        "--poly",
        "z^2+5z+3",
        "--count-only",
    ]);
    assert_eq!(lines, ["129"]);
    let lines = lines_ok(&[
        "enumerate-hp",
        "--vars",
        "5",
        "--poly",
        "z^2+5z+3",
        "--almost-lex-only",
        "--count-only",
    ]);
    assert_eq!(lines, ["129"]);
    let lines = lines_ok(&[
        "enumerate-almost-lex",
        "--vars",
        "5",
        "--poly",
        "z^2+5z+3",
        "--max-betti",
        "--count-only",
    ]);
    assert_eq!(lines, ["4"]);
}

#[test]
fn verify_and_oracle_flags_pass() {
    let lines = lines_ok(&[
        "enumerate-almost-lex",
        "--vars",
        "5",
        "--poly",
        "2z^2+z+1",
        "--verify",
        "--oracle",
    ]);
    assert_eq!(lines.last().map(String::as_str), Some("count=4"));
    let lines = lines_ok(&[
        "enumerate-series",
        "--vars",
        "5",
        "--numerator",
        "1,0,-6,8,-3",
        "--verify",
        "--oracle",
    ]);
    assert_eq!(lines.last().map(String::as_str), Some("count=3"));
}

#[test]
fn json_records_and_summary() {
    let lines = lines_ok(&[
        "enumerate-series",
        "--vars",
        "5",
        "--numerator",
        "1,0,-6,8,-3",
        "--format",
        "json",
    ]);
    assert_eq!(lines.len(), 4);
    let first: Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(first["text"], "(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)");
    assert_eq!(
        first["series_numerator"],
        serde_json::json!([1, 0, -6, 8, -3])
    );
    assert_eq!(first["hilbert_polynomial"]["coefficients"], "4*z+1");
    assert_eq!(first["ideal"]["vars"], 5);
    let summary: Value = serde_json::from_str(&lines[3]).unwrap();
    assert_eq!(summary["summary"]["count"], 3);
    assert_eq!(summary["summary"]["command"], "enumerate-series");
}

#[test]
fn analyze_reads_json_from_stdin() {
    let record = lines_ok(&[
        "lex-ideal",
        "--vars",
        "5",
        "--poly",
        "4z+1",
        "--format",
        "json",
    ]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_ssideals"))
        .args(["analyze", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(record[0].as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["hilbert_polynomial"]["coefficients"], "4*z+1");
    assert_eq!(v["almost_lex"], true);
}

#[test]
fn analyze_text_ideal() {
    let out = ssideals(&[
        "analyze",
        "--vars",
        "5",
        "--ideal",
        "(x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2)",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["betti"], serde_json::json!([6, 8, 3]));
    assert_eq!(v["regularity"], 2);
}

#[test]
fn series_edge_numerators() {
    assert_eq!(
        lines_ok(&["enumerate-series", "--vars", "4", "--numerator", "1"]),
        ["(0)", "count=1"]
    );
    assert_eq!(
        lines_ok(&["enumerate-series", "--vars", "4", "--numerator", "1,-1"]),
        ["(x0)", "count=1"]
    );
}

#[test]
fn table_preset_runs() {
    let lines = lines_ok(&["table", "--poly", "8", "--n", "3,6"]);
    assert_eq!(lines.len(), 2);
    assert!(
        lines[1].contains("12 (") && lines[1].contains("19 ("),
        "{lines:?}"
    );
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 6] = [
        (&["enumerate-hp", "--vars", "5", "--poly", "0"], 2),
        (&["enumerate-hp", "--vars", "4", "--poly", "z^2/3"], 2),
        (
            &["enumerate-series", "--vars", "4", "--numerator", "2,-1"],
            2,
        ),
        (&["enumerate-hp", "--vars", "2", "--poly", "z+1"], 3),
        (&["analyze", "--vars", "4", "--ideal", "(x0*x3)"], 4),
        (
            &[
                "analyze",
                "--vars",
                "4",
                "--ideal",
                "(x0^2, x0*x1, x0*x2, x0*x3)",
            ],
            4,
        ),
    ];
    for (args, code) in cases {
        let out = ssideals(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error: "),
            "{args:?}"
        );
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
