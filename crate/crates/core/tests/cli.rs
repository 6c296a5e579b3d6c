//! End-to-end runs of the `hyperarr` binary.

use std::process::{Command, Output};

use hyperarr::exact::BivariatePolynomial;
use hyperarr::reference;
use serde_json::Value;

fn hyperarr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperarr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn charpoly_of_boolean_three() {
    let o = hyperarr(&["charpoly", "--builtin", "boolean3", "--json", "--betti"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let chi = BivariatePolynomial::from_json(&v["chi"]).unwrap();
    assert_eq!(chi, BivariatePolynomial::from_int_terms(&[(0, 0, -1), (0, 1, 3), (0, 2, -3), (0, 3, 1)]));
    assert_eq!(v["betti"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn reduced_x3_deletion_as_json() {
    let o = hyperarr(&["st-poly", "--builtin", "x3", "--delete-hyperplane", "1", "--reduced", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let p = BivariatePolynomial::from_json(&json(&o)["reduced"]).unwrap();
    assert_eq!(p.as_x_poly().unwrap(), reference::x3_deleted_y_reduced_expected());
}

#[test]
fn file_input_matches_builtin() {
    let dir = std::env::temp_dir().join(format!("hyperarr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x3.txt");
    let text = stdout(&hyperarr(&["builtin", "x3"]));
    std::fs::write(&path, text).unwrap();
    let from_file = hyperarr(&["st-poly", path.to_str().unwrap(), "--json"]);
    let from_builtin = hyperarr(&["st-poly", "--builtin", "x3", "--json"]);
    assert_eq!(from_file.stdout, from_builtin.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["st-poly", "--builtin", "x3_h_x", "--trace", "--json"];
    assert_eq!(hyperarr(&args).stdout, hyperarr(&args).stdout);
}

#[test]
fn exit_codes() {
    // input errors
    assert_eq!(hyperarr(&["charpoly"]).status.code(), Some(2));
    assert_eq!(hyperarr(&["charpoly", "--builtin", "nosuch"]).status.code(), Some(2));
    assert_eq!(hyperarr(&["charpoly", "--builtin", "x3", "--bogus"]).status.code(), Some(2));
    assert_eq!(hyperarr(&["st-poly", "--builtin", "x3", "--delete-hyperplane", "1,1,1,1"]).status.code(), Some(2));
    let bad = hyperarr(&["charpoly", "/nonexistent/arrangement.txt"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(String::from_utf8(bad.stderr).unwrap().lines().count(), 1);
    // unknown outcome
    assert_eq!(hyperarr(&["st-poly", "--builtin", "x3_h_y", "--method", "free"]).status.code(), Some(1));
}

#[test]
fn freeness_json_schema() {
    let v = json(&hyperarr(&["freeness", "--builtin", "x3", "--json"]));
    assert_eq!(v["status"], "free");
    assert_eq!(v["exponents"], serde_json::json!([1, 3, 3, 3]));
    assert!(v["trace"].as_array().unwrap().len() > 1);
    let v = json(&hyperarr(&["freeness", "--builtin", "x3_h_x", "--json"]));
    assert_eq!(v["status"], "notfree");
    assert_eq!(v["witness"]["kind"], "non_splitting_chi");
}

#[test]
fn oracle_tables_and_checks() {
    let o = hyperarr(&["oracle", "--builtin", "boolean2", "--dmax", "3", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!([[1, 2, 3, 4], [0, 2, 4, 6], [0, 0, 1, 2]]));
    let tsv = stdout(&hyperarr(&["oracle", "--builtin", "boolean3", "--check", "bseq", "--hyperplane", "0", "--dmax", "4"]));
    assert!(tsv.lines().skip(1).all(|l| l.split('\t').nth(5) == Some("0")));
    let fr = stdout(&hyperarr(&["oracle", "--builtin", "x3", "--check", "fr", "--hyperplane", "0", "--pmax", "1", "--dmax", "8"]));
    assert!(fr.contains("# match: true"));
    let b = json(&hyperarr(&["oracle", "--builtin", "x3", "--check", "teraoB", "--hyperplane", "0", "--dmax", "4", "--format", "json"]));
    assert!(b.as_array().unwrap().iter().all(|r| r["failures"] == 0));
}

#[test]
fn conjectures_report() {
    let v = json(&hyperarr(&["conjectures", "--builtin", "x3", "--delete-hyperplane", "1", "--json"]));
    assert_eq!(v["degree_equals_n"], true);
    assert_eq!(v["monic"], true);
    assert_eq!(v["palindromic"], false);
}

#[test]
fn human_and_json_agree() {
    let human = stdout(&hyperarr(&["st-poly", "--builtin", "three_generic", "--reduced"]));
    let v = json(&hyperarr(&["st-poly", "--builtin", "three_generic", "--reduced", "--json"]));
    let p = BivariatePolynomial::from_json(&v["reduced"]).unwrap().as_x_poly().unwrap();
    assert!(human.contains(&p.display_in("x")));
}

#[test]
fn verify_single_criterion() {
    let o = hyperarr(&["verify-paper-examples", "--only", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("criterion  3 PASS"));
}
