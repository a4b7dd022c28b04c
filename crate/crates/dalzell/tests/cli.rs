//! End-to-end checks of the command-line surface: subcommands, output
//! contents, and the exit-code contract (0 ok, 1 usage, 2 check failure,
//! 3 resource limit).

use std::process::{Command, Output};

fn dalzell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dalzell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn help_exits_zero() {
    let out = dalzell(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = dalzell(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn integral_reports_exact_value() {
    let out = dalzell(&["integral", "--m", "4", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("I(4,4) = 22/7 - π"), "{text}");
    assert!(text.contains("0.001264489267"), "{text}");
    assert!(text.contains("class: pi"), "{text}");
}

#[test]
fn integral_over_limit_exits_three() {
    let out = dalzell(&["integral", "--m", "600", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let out = dalzell(&["integral", "--m", "600", "--n", "4", "--limit", "700"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn approx_reports_certified_side() {
    let out = dalzell(&["approx", "--m", "32", "--n", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("19809071774292917047896724979/6305423381881718760060595200"),
        "{text}"
    );
    assert!(text.contains("target-above"), "{text}");
}

#[test]
fn approx_mixed_class_is_usage_error() {
    let out = dalzell(&["approx", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_selector_validation() {
    // no selector
    let out = dalzell(&["bounds", "--series", "gls", "--k", "10"]);
    assert_eq!(out.status.code(), Some(1));
    // two selectors
    let out = dalzell(&[
        "bounds", "--series", "gls", "--k", "10", "--n", "2", "--prop", "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // johnsonbaugh without --j
    let out = dalzell(&[
        "bounds",
        "--series",
        "gls",
        "--k",
        "10",
        "--method",
        "johnsonbaugh",
    ]);
    assert_eq!(out.status.code(), Some(1));
    // proposition/series mismatch
    let out = dalzell(&["bounds", "--series", "gls", "--k", "10", "--prop", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_proposition_output() {
    let out = dalzell(&["bounds", "--series", "gls", "--k", "10", "--prop", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("upper = 1/40"), "{text}");
    assert!(text.contains("0.025000000000"), "{text}");
}

#[test]
fn bounds_generic_reports_exponents() {
    let out = dalzell(&["bounds", "--series", "lnsqrt2", "--k", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("m_upper = 6"), "{text}");
    assert!(text.contains("lower ="), "{text}");

    let out = dalzell(&["bounds", "--series", "gls", "--k", "400", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_preset_csv() {
    let out = dalzell(&[
        "table", "--preset", "table1", "--digits", "12", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.starts_with("method,k,value_decimal,value_rational\n"),
        "{text}"
    );
    assert!(text.contains("Leibniz,10,0.047619047619,1/21"), "{text}");
    assert!(text.contains("True error,20,"), "{text}");
}

#[test]
fn table_preset_text_layout() {
    let out = dalzell(&["table", "--preset", "table2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("k=10") && text.contains("k=20"), "{text}");
    assert!(text.contains("True error"), "{text}");
    assert!(!text.contains("Leibniz"), "{text}");
}

#[test]
fn table_usage_errors() {
    let out = dalzell(&["table", "--preset", "table9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = dalzell(&["table", "--preset", "table1", "--series", "gls"]);
    assert_eq!(out.status.code(), Some(1));
    let out = dalzell(&["table", "--series", "gls", "--k", "5", "--side", "upper"]);
    assert_eq!(out.status.code(), Some(1));
    let out = dalzell(&[
        "table",
        "--series",
        "gls",
        "--k",
        "5",
        "--side",
        "upper",
        "--methods",
        "nonsense",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table_custom_methods() {
    let out = dalzell(&[
        "table",
        "--series",
        "ahs",
        "--k",
        "5,7",
        "--side",
        "upper",
        "--methods",
        "leibniz,johnsonbaugh=2,prop=5,dalzell=4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"method\":\"Proposition 5\""), "{text}");
    assert!(text.contains("\"method\":\"Dalzell (n=4)\""), "{text}");
    assert!(text.contains("\"k\":7"), "{text}");
}

#[test]
fn check_small_limits_pass() {
    let out = dalzell(&[
        "check", "--m-max", "6", "--n-max", "2", "--k-max", "2", "--digits", "15",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS positivity"), "{text}");
    assert!(text.contains("check suite:"), "{text}");
}

#[test]
fn check_rejects_zero_limits() {
    let out = dalzell(&["check", "--k-max", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
