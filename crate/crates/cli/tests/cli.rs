use std::io::Write;
use std::process::{Command, Output};

use blowup_core::graph::{Graph, VertexSet};
use blowup_core::poly::{graph_polynomial, MultiAffinePoly};
use serde_json::Value;

fn blowup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(args)
        .env_remove("BLOWUP_MAX_K")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn poly_k2_text() {
    let o = blowup(&["poly", "--edges", "2; 1 2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("p = 3*n1*n2 - 4*n1 - 4*n2 + 4"));
}

#[test]
fn poly_p3_json_round_trips() {
    let f = temp_file("3\n1 2\n2 3\n");
    let o = blowup(&["poly", "--input", f.path().to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["source"], "graph");
    assert_eq!(v["polynomial"]["coeffs"]["0"], "-8");
    for key in ["1", "2", "4"] {
        assert_eq!(v["polynomial"]["coeffs"][key], "8");
    }
    let p: MultiAffinePoly = serde_json::from_value(v["polynomial"].clone()).unwrap();
    assert_eq!(p, graph_polynomial(&Graph::path(3)).unwrap());
    assert_eq!(p.coeff(VertexSet::pair(0, 2)), 0.into());
}

#[test]
fn distance_matrix_input() {
    let f = temp_file("dist n=3\n0 1 5\n1 0 1\n5 1 0\n");
    let path = f.path().to_str().unwrap();
    let strict = blowup(&["poly", "--input", path]);
    assert_eq!(strict.status.code(), Some(2));
    let relaxed = blowup(&["poly", "--input", path, "--no-metric-check", "--json"]);
    assert!(relaxed.status.success());
    assert_eq!(json(&relaxed)["source"], "metric-input");
}

#[test]
fn upoly_prints_univariate() {
    let o = blowup(&["upoly", "--edges", "3; 1 2; 2 3"]);
    assert_eq!(stdout(&o).trim(), "-12*n^2 + 24*n - 8");
}

#[test]
fn check_theorem4_examples() {
    let o = blowup(&["check", "--graph6", "Cl", "--battery", "theorem4", "--json"]);
    assert!(o.status.success());
    let t = &json(&o)["theorem4"];
    assert_eq!(t["consistent"], true);
    for flag in ["coeffs_nonneg", "psd", "multipartite", "lorentzian"] {
        assert_eq!(t[flag], true);
    }
    let o = blowup(&[
        "check",
        "--edges",
        "4; 1 2; 2 3; 3 4",
        "--battery",
        "theorem4",
        "--json",
    ]);
    assert!(o.status.success());
    let t = &json(&o)["theorem4"];
    assert_eq!(t["consistent"], true);
    assert_eq!(t["lorentzian"], false);
}

#[test]
fn check_g_circ_superset_families_fail() {
    let edges = "7; 1 2; 1 3; 2 4; 3 4; 4 5; 4 6; 6 7; 3 7";
    let o = blowup(&[
        "check",
        "--edges",
        edges,
        "--battery",
        "matroid-prime",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    for r in v["matroid_prime"].as_array().unwrap() {
        assert_eq!(r["witness"]["kind"], "exchange");
    }
}

#[test]
fn check_is_deterministic() {
    let args = [
        "check",
        "--graph6",
        "Ch",
        "--battery",
        "stability",
        "--seed",
        "9",
        "--samples",
        "30",
        "--json",
    ];
    let a = blowup(&args);
    let b = blowup(&args);
    assert_eq!(a.stdout, b.stdout);
    let seq = Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(args)
        .arg("--sequential")
        .output()
        .unwrap();
    assert_eq!(a.stdout, seq.stdout);
    assert_eq!(json(&a)["seed"], 9);
}

#[test]
fn scan_four_vertices() {
    let o = blowup(&["scan", "--n", "4", "--dedup"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    let summary: Value = serde_json::from_str(lines[6]).unwrap();
    assert_eq!(summary["summary"]["passed"], 6);
    let first: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["index"], 0);
}

#[test]
fn scan_continues_after_bad_record() {
    let f = temp_file("Cl\n?!\nA_\n");
    let o = blowup(&[
        "scan",
        "--input",
        f.path().to_str().unwrap(),
        "--battery",
        "spectrum",
    ]);
    let out = stdout(&o);
    let lines: Vec<Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1]["error"].is_string());
    assert_eq!(lines[2]["graph6"], "A_");
    assert_eq!(lines[3]["summary"]["errors"], 1);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn recover_round_trip() {
    let o = blowup(&["poly", "--graph6", "Cl", "--json"]);
    let f = temp_file(&stdout(&o));
    let r = blowup(&["recover", "--input", f.path().to_str().unwrap(), "--json"]);
    assert!(r.status.success());
    assert_eq!(json(&r)["graph6"], "Cl");

    let bad = blowup(&["recover", "--poly", r#"{"k":2,"coeffs":{"3":"2"}}"#]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn capacity_exit_code() {
    let o = Command::new(env!("CARGO_BIN_EXE_blowup"))
        .args(["poly", "--graph6", "Cl"])
        .env("BLOWUP_MAX_K", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(
        blowup(&["poly", "--edges", "3; 1 2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        blowup(&["poly", "--edges", "2; 1 1"]).status.code(),
        Some(2)
    );
    assert_eq!(blowup(&["poly", "--graph6", "A"]).status.code(), Some(2));
    assert_eq!(blowup(&["poly"]).status.code(), Some(2));
}

#[test]
fn reproduce_passes() {
    let o = blowup(&["reproduce", "--samples", "20", "--json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v = json(&o);
    let items = v["items"].as_array().unwrap();
    assert!(items.iter().all(|i| i["passed"] == true));
    let cospectral = items
        .iter()
        .find(|i| i["name"] == "cospectral_blowups")
        .unwrap();
    assert!(cospectral["detail"]
        .as_str()
        .unwrap()
        .contains("-320*n^6 + 3712*n^5 - 10816*n^4 + 10880*n^3 - 1664*n^2 - 2048*n + 256"));
    let path = items.iter().find(|i| i["name"] == "path_support").unwrap();
    assert!(path["detail"].as_str().unwrap().contains("det M_P9 = 0"));
}
