use std::process::Command;

use quasif_cli::run;
use quasif_core::{
    construct_of_type, enumerate_quasi, hilbert_function_from_fvector, minimal_primes, quasi_type,
    stanley_reisner_complex, type_bounds, EnumerateOptions, Ideal,
};

const J: &str = "x1x2x4,x1x2x5,x1x4x5,x2x3x5,x3x4x5";

fn ok(args: &[&str]) -> String {
    let out = run(std::iter::once("quasif").chain(args.iter().copied()));
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn classify_matches_library() {
    let j = Ideal::parse_list(J, 5).unwrap();
    let t = quasi_type(&j).unwrap();
    let text = ok(&["classify", "--gens", J, "--n", "5"]);
    assert_eq!(text.lines().next().unwrap(), "type: (0, 1, 0)");
    assert_eq!(text.lines().next().unwrap(), format!("type: {}", t.quasi_type().unwrap()));
    let v = json(&["classify", "--gens", J, "--n", "5"]);
    assert_eq!(v["type"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["nonface_fvector"], serde_json::json!([5, 10, 5]));
}

#[test]
fn inferred_variable_count() {
    assert_eq!(ok(&["classify", "--gens", J]), ok(&["classify", "--gens", J, "--n", "5"]));
}

#[test]
fn classify_json_round_trips_as_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.json");
    let first = ok(&["--format", "json", "--out", path.to_str().unwrap(), "classify", "--gens", J, "--n", "5"]);
    assert!(first.is_empty());
    let saved = std::fs::read_to_string(&path).unwrap();
    let reparsed = Ideal::from_json(&saved).unwrap();
    assert_eq!(reparsed, Ideal::parse_list(J, 5).unwrap());
    let again = ok(&["--format", "json", "classify", "--input", path.to_str().unwrap()]);
    assert_eq!(again, saved);
}

#[test]
fn text_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.txt");
    std::fs::write(&path, "# intro example\nx1x2\nx3x4\nx1x3x5\nx2x4x5\n").unwrap();
    let v = json(&["fvector", "--input", path.to_str().unwrap()]);
    assert_eq!(v["facet_fvector"], serde_json::json!([5, 8, 2]));
    assert_eq!(v["nonface_fvector"], serde_json::json!([5, 8, 2]));
}

#[test]
fn bounds_and_construct_match_library() {
    assert_eq!(ok(&["bounds", "--n", "8"]), "-26 <= b <= 4\n");
    assert_eq!(type_bounds(8).unwrap(), (-26, 4));
    let v = json(&["construct", "--n", "8", "--b", "-6"]);
    let lib = construct_of_type(8, -6).unwrap();
    assert_eq!(v["generators"], serde_json::to_value(lib.ideal.to_file().generators).unwrap());
    assert_eq!(v["generators"].as_array().unwrap().len(), 17);
    assert_eq!(v["type"], serde_json::json!([0, -6]));
    let explicit = json(&["construct", "--n", "8", "--b", "-6", "--A", "1,2,3,4", "--D", "x1x6,x2x7,x2x8,x3x7,x4x7"]);
    assert_eq!(explicit["D"], serde_json::json!([[1, 6], [2, 7], [2, 8], [3, 7], [4, 7]]));
}

#[test]
fn primes_match_library() {
    let i = Ideal::parse_list("x1x2,x3x4", 4).unwrap();
    let expected: String = minimal_primes(&i).unwrap().iter().map(|p| format!("{p}\n")).collect();
    assert_eq!(ok(&["primes", "--gens", "x1x2,x3x4", "--n", "4"]), expected);
    assert_eq!(expected, "(x1,x3)\n(x1,x4)\n(x2,x3)\n(x2,x4)\n");
    let v = json(&["primes", "--gens", "x1x2,x3x4", "--n", "4", "--check", "2,4"]);
    assert_eq!(v["minimal"], true);
}

#[test]
fn enumerate_matches_library() {
    let v = json(&["enumerate", "--n", "4", "--b", "-2"]);
    let lib = enumerate_quasi(4, -2, EnumerateOptions::default()).unwrap();
    assert_eq!(v, serde_json::from_str::<serde_json::Value>(&lib.to_json()).unwrap());
    assert_eq!(v["count"], 15);
    let sym = json(&["enumerate", "--n", "4", "--b", "0", "--mod-symmetry"]);
    assert_eq!(sym["orbit_count"], 1);
}

#[test]
fn hilbert_matches_library() {
    let i = Ideal::parse_list(J, 5).unwrap();
    let fv = stanley_reisner_complex(&i).unwrap().f_vector().unwrap();
    let expected = hilbert_function_from_fvector(&fv, 4).unwrap();
    assert_eq!(ok(&["hilbert", "--gens", J, "--n", "5", "--function", "4"]), format!("H(4) = {expected}\n"));
    let v = json(&["hilbert", "--gens", "x1x2,x3x4", "--n", "4", "--closed-form"]);
    assert_eq!(v["closed_matches"], true);
    assert_eq!(v["closed_polynomial"], "4z");
}

#[test]
fn perfect_commands() {
    assert_eq!(ok(&["perfect", "number", "--n", "6"]), "N(6,2) = 6\n");
    assert_eq!(ok(&["perfect", "number", "--n", "6", "--brute-force"]), "N(6,2) = 6\n");
    let v = json(&["perfect", "check", "--gens", "x1x2,x3x4", "--n", "4"]);
    assert_eq!(v["perfect"], true);
}

#[test]
fn complex_lists_facets() {
    assert_eq!(ok(&["complex", "--gens", "x1x2,x3x4", "--n", "4"]), "{1,3}\n{1,4}\n{2,3}\n{2,4}\n");
    assert_eq!(ok(&["complex", "--kind", "facet", "--gens", "x1x2,x3x4", "--n", "4"]), "{1,2}\n{3,4}\n");
}

#[test]
fn domain_errors_exit_one() {
    let out = run(["quasif", "bounds", "--n", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[UnsupportedN]"), "{}", out.stderr);
    let out = run(["quasif", "classify", "--gens", "x1x2", "--n", "3", "--criterion", "height"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error[UncoveredVertices]"), "{}", out.stderr);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(["quasif", "classify", "--n", "5"]).code, 2);
    assert_eq!(run(["quasif", "classify", "--gens", "x1x2", "--input", "f.json"]).code, 2);
    assert_eq!(run(["quasif", "frobnicate"]).code, 2);
    assert_eq!(run(["quasif", "--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_quasif");
    let out = Command::new(bin).args(["classify", "--gens", J, "--n", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("type: (0, 1, 0)"));
    let out = Command::new(bin).args(["construct", "--n", "8", "--b", "-5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error[InadmissibleType]"));
    let out = Command::new(bin).args(["bounds"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg("fixtures").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().filter(|l| l.starts_with("PASS")).count(), 4);
}
