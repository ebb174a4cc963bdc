use std::process::{Command, Output};

use serde_json::Value;

fn setcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setcalc")).args(args).output().expect("setcalc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok_line(args: &[&str]) -> String {
    let o = setcalc(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim_end().to_string()
}

#[test]
fn eval_worked_example() {
    let out = ok_line(&["eval", "P^-1(P({0,1,2}))", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["normal_form"], "{{},{{}},{{},{{}}}}");
    assert_eq!(v["level"], 0);
    assert_eq!(v["ch_card"], "fin:3");
}

#[test]
fn eval_empty_set() {
    let v: Value = serde_json::from_str(&ok_line(&["eval", "{}", "--format", "json"])).unwrap();
    assert_eq!(v["normal_form"], "{}");
    assert_eq!(v["level"], 0);
    assert_eq!(v["zermelo"]["card"], "fin:0");
}

#[test]
fn eval_union_metadata() {
    let out = ok_line(&["eval", "3 u P^-1({1}) u P^-2(3)", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["level"], Value::Null);
    assert_eq!(v["ch_card"], Value::Null);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0]["rho"], "-1");
    assert_eq!(comps[0]["tau"], "fin:1");
    assert_eq!(comps[1]["level"], 2);
}

#[test]
fn eval_domain_error() {
    let o = setcalc(&["eval", "P^-2(1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain error"));
}

#[test]
fn parse_errors_exit_one_with_position() {
    let o = setcalc(&["normalize", "{P^-1(2)}"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("structural error at 1:2"));
    let o = setcalc(&["normalize", "P(1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error at 1:4"));
}

#[test]
fn normalize_prints_canonical_form() {
    assert_eq!(ok_line(&["normalize", "P^-1({1}) u 3"]), "{{},{{}},{{},{{}}}} u P^-1({{{}}})");
}

#[test]
fn cmp_examples() {
    let negch = ["cmp", "--order=negch", "{0,1,2}", "{0,1,2} u P^-1({1})"];
    assert_eq!(ok_line(&negch), "lt");
    assert_eq!(ok_line(&["cmp", "--order=negchs", "3 u P^-1({1})", "3 u P^-1(3)"]), "lt");
    assert_eq!(ok_line(&["cmp", "--order=ch", "P^-1(3)", "N"]), "eq");
    assert_eq!(ok_line(&["cmp", "--order", "negch", "3 u P^-1({1})", "3 u P^-2(3)"]), "incomparable");
    let o = setcalc(&["cmp", "--order=ch", "P^-2(3)", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside EZF"));
}

#[test]
fn between_examples() {
    assert_eq!(ok_line(&["between", "3", "3 u P^-1({1})"]), "{{},{{}},{{},{{}}}} u P^-2({{{}}})");
    let w = ok_line(&["between", "3 u P^-1({1})", "3 u P^-1(3)"]);
    assert_eq!(ok_line(&["cmp", "--order=negchs", "3 u P^-1({1})", &w]), "lt");
    assert_eq!(ok_line(&["cmp", "--order=negchs", &w, "3 u P^-1(3)"]), "lt");

    let o = setcalc(&["between", "3", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ordering error"));
    let o = setcalc(&["between", "1", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("witness unavailable"));
}

#[test]
fn audit_single_check() {
    let o = setcalc(&["audit", "--check", "inverse2", "--rank", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["name"], "inverse2");
    assert_eq!(v["tested"], 15);
    assert_eq!(v["failures"], Value::Array(vec![]));
    assert_eq!(v["seed"], 42);
    assert_eq!(v["millis"], Value::Null);
}

#[test]
fn audit_timings_flag() {
    let out = ok_line(&["audit", "--check", "inverse", "--format", "json", "--timings"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["millis"].is_u64());
}

#[test]
fn audit_usage_errors() {
    assert_eq!(setcalc(&["audit", "--check", "no-such"]).status.code(), Some(1));
    assert_eq!(setcalc(&["cmp", "3", "4"]).status.code(), Some(1));
    assert_eq!(setcalc(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn audit_rank_too_large_is_reported_per_check() {
    let o = setcalc(&["audit", "--check", "transitivity", "--rank", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["name"], "transitivity");
    assert!(v["error"].as_str().unwrap().contains("resource limit"));
}
