//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols-cft"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn charge_prints_exact_value() {
    let out = stdout(&["charge", "--gram", r#"[["2/3","-1/3"],["-1/3","2/3"]]"#]);
    assert_eq!(out.trim(), "c = -30");
    // wrapped wire form is accepted too
    let out = stdout(&["charge", "--gram", r#"{"theta":2,"g":[["2/3","-1/3"],["-1/3","2/3"]]}"#, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["charge"], "-30");
}

#[test]
fn bad_input_is_a_usage_style_error() {
    let out = run(&["charge", "--gram", "[[\"1/0\"]]"]);
    assert!(!out.status.success());
    let out = run(&["charge", "--gram", "not json"]);
    assert!(!out.status.success());
    // singular Gram: computation error
    let out = run(&["charge", "--gram", r#"[["1","1"],["1","1"]]"#]);
    assert!(!out.status.success());
    // missing argument: clap usage error, exit code 2
    let out = run(&["charge"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cartan_and_reflect_round_trip() {
    let braiding = r#"{"theta":2,"q":[["1/5","9/10"],["9/10","1/5"]]}"#;
    let out = stdout(&["cartan", "--braiding", braiding, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cartan"], serde_json::json!([[2, -1], [-1, 2]]));

    // json output of reflect feeds back in unchanged (round trip)
    let reflected = stdout(&["reflect", "--braiding", braiding, "--k", "1", "--json"]);
    let again = stdout(&["reflect", "--braiding", reflected.trim(), "--k", "1", "--json"]);
    let c1 = stdout(&["cartan", "--braiding", again.trim(), "--json"]);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&c1).unwrap()["cartan"],
        serde_json::json!([[2, -1], [-1, 2]]));
}

#[test]
fn catalog_verbs() {
    let list = stdout(&["catalog", "list", "--json"]);
    let ids: Vec<String> = serde_json::from_str(&list).unwrap();
    assert_eq!(ids.len(), 30);
    assert!(ids.contains(&"2.4.1".to_string()));

    let shown = stdout(&["catalog", "show", "2.1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&shown).unwrap();
    assert_eq!(v["cartan_type"], "A2");
    assert!(v["presentation"][0]["dimension"].as_str().unwrap().contains("p^3"));

    let out = run(&["catalog", "show", "9.99"]);
    assert!(!out.status.success());

    let matched = stdout(&[
        "catalog",
        "match",
        "--braiding",
        r#"{"theta":2,"q":[["1/3","5/6"],["5/6","1/3"]]}"#,
        "--json",
    ]);
    let ids: Vec<String> = serde_json::from_str(&matched).unwrap();
    assert!(ids.contains(&"2.1".to_string()));
}

#[test]
fn catalog_export_is_the_full_document() {
    let doc = stdout(&["catalog", "export"]);
    let items: Vec<serde_json::Value> = serde_json::from_str(&doc).unwrap();
    assert_eq!(items.len(), 30);
}

#[test]
fn nichols_dim_reports_series() {
    let out = stdout(&[
        "nichols-dim",
        "--braiding",
        r#"{"theta":2,"q":[["1/2","3/4"],["3/4","1/2"]]}"#,
        "--cap",
        "8",
        "--hilbert",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 8);
    assert_eq!(v["status"], "finite");
    assert_eq!(v["dims"], serde_json::json!([1, 2, 2, 2, 1, 0]));
}

#[test]
fn solve_emits_xi_data() {
    let out = stdout(&["solve", "--gram", r#"[["2/3","-1/3"],["-1/3","2/3"]]"#, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["x"], serde_json::json!(["-2", "-2"]));
    assert_eq!(v["charge"], "-30");
}

#[test]
fn coset_negative_control_exits_nonzero() {
    let out = run(&["coset", "--item", "2.2", "--p", "5", "--negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["coset", "--item", "2.2", "--p", "5"]);
    assert!(out.status.success());
}

#[test]
fn enumerate_emits_records() {
    let out = stdout(&[
        "enumerate", "--item", "2.2", "--int-bound", "2", "--order-min", "3", "--order-max", "4",
    ]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert!(!rows.is_empty());
    for row in &rows {
        assert_eq!(row["params"]["m"], 0);
        assert_eq!(row["params"]["n"], 0);
        assert_eq!(row["class"]["family"], "regular");
        assert!(row["charge"].is_string());
    }
}

#[test]
fn emitted_gram_json_feeds_back_in() {
    let out = stdout(&[
        "enumerate", "--item", "2.2", "--int-bound", "1", "--order-min", "3", "--order-max", "3",
    ]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    let row = rows.first().expect("at least one record");
    let gram = serde_json::to_string(&row["gram"]).unwrap();
    let charge = stdout(&["charge", "--gram", &gram, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&charge).unwrap();
    assert_eq!(v["charge"], row["charge"]);
}

#[test]
fn w3_passes_and_reports_coefficients() {
    let out = stdout(&["w3", "--p", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["charge"], "-30");
}
