use std::process::Command;

use oneadic_cli::{exit, run};
use serde_json::Value;

fn oneadic(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_oneadic"))
        .args(args)
        .env_remove("ONEADIC_ENUM_BOUND")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["oneadic", "--format", "json"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    (out.code, serde_json::from_str(&out.stdout).expect("valid json"))
}

#[test]
fn gene_examples() {
    let (code, v) = json(&["gene", "-p", "3", "-f", "1", "--h", "5", "--gamma", "0"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["result"]["genes"], serde_json::json!(["OO"]));
    let (code, v) = json(&["gene", "-p", "3", "-f", "1", "--h", "3", "--gamma", "0", "--oracle"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["result"]["genes"], serde_json::json!(["BA"]));
    assert_eq!(v["result"]["oracle_agrees"], true);
}

#[test]
fn gene_degenerate_and_ambiguous_exit_2() {
    let (code, v) = json(&["gene", "-p", "3", "-f", "1", "--h", "4", "--gamma", "1"]);
    assert_eq!(code, exit::AMBIGUOUS);
    assert_eq!(v["flags"]["degenerate"], true);
    let (code, v) = json(&["gene", "-p", "3", "-f", "1", "--h", "4", "--gamma", "0"]);
    assert_eq!(code, exit::AMBIGUOUS);
    assert_eq!(v["flags"]["ambiguous"], true);
    assert_eq!(v["result"]["genes"], serde_json::json!(["BB", "OO"]));
}

#[test]
fn module_examples() {
    let (_, v) = json(&["defring", "--jii", "0,2", "-f", "3"]);
    assert_eq!(v["result"]["multiplicity"], 4);
    assert_eq!(v["result"]["hilbert_series"].as_array().unwrap()[..4], serde_json::json!([1, 5, 13, 25]).as_array().unwrap()[..]);
    let (_, v) = json(&["serre", "-n", "2", "-f", "1", "-p", "3"]);
    assert_eq!(v["result"]["classes"].as_array().unwrap().len(), 6);
    let (_, v) = json(&["galois", "tame-compare", "-n", "2", "-p", "3,5"]);
    let rows: Vec<(u64, u64, u64, u64)> = v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let g = |k: &str| r[k].as_u64().unwrap();
            (g("p"), g("p_n_minus_1"), g("p_minus_1"), g("q_analogue"))
        })
        .collect();
    assert_eq!(rows, vec![(3, 8, 2, 4), (5, 24, 4, 6)]);
}

#[test]
fn config_is_echoed() {
    let (_, v) = json(&["--bound", "12345", "weights", "--jii", "1", "-f", "2"]);
    assert_eq!(v["config"]["global"]["bound"], 12345);
    assert_eq!(v["config"]["command"]["weights"]["jii"], "1");
    assert_eq!(v["command"], "weights");
}

#[test]
fn large_integers_are_strings() {
    let (_, v) = json(&["card-gl", "-n", "5", "-q", "101"]);
    let total = &v["result"]["cardinality"]["total"];
    assert!(total.is_string());
    let (_, small) = json(&["card-gl", "-n", "2", "-q", "3"]);
    assert_eq!(small["result"]["cardinality"]["total"], 48);
}

#[test]
fn tsv_layout() {
    let out = run(["oneadic", "--format", "tsv", "galois", "tame-compare", "-n", "2", "-p", "3,5"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(lines[0].starts_with("# galois tame-compare config={"));
    assert_eq!(lines[1], "p\tp^n-1\tp-1\t[n]_p\texact\tlimit");
    assert_eq!(lines[2], "3\t8\t2\t4\ttrue\t2");
    assert_eq!(lines.len(), 4);
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = oneadic(&["gene", "-p", "1", "-f", "1", "--h", "0", "--gamma", "0"]);
    assert_eq!(code, exit::INVALID);
    assert!(err.contains("p must be at least 2"));
    assert_eq!(oneadic(&["no-such-command"]).0, exit::INVALID);
    assert_eq!(oneadic(&["--format", "xml", "weights", "-f", "1"]).0, exit::INVALID);
    assert_eq!(oneadic(&["kisin", "--coeffs", "11,11,11,11,11,11,11", "-q", "9"]).0, exit::CAPACITY);
    assert_eq!(oneadic(&["--bound", "3", "kisin", "--coeffs", "11", "-q", "3"]).0, exit::CAPACITY);
    assert_eq!(oneadic(&["--help"]).0, exit::OK);
}

#[test]
fn bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_oneadic"))
        .args(["kisin", "--coeffs", "11", "-q", "3"])
        .env("ONEADIC_ENUM_BOUND", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(exit::CAPACITY));
}

#[test]
fn sweep_rows_in_canonical_order() {
    let (_, v) = json(&["--jobs", "4", "sweep", "serre", "-p", "5,3", "-f", "2,1"]);
    let keys: Vec<(u64, u64, u64)> = v["result"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["p"].as_u64().unwrap(), r["f"].as_u64().unwrap(), r["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(keys, vec![(5, 2, 600), (5, 1, 20), (3, 2, 72), (3, 1, 6)]);
}

#[test]
fn sweep_gene_tallies() {
    let (_, v) = json(&["sweep", "gene", "-p", "3", "-f", "1", "--oracle"]);
    let t = &v["result"]["rows"][0]["tally"];
    assert_eq!(t["residues"], 8);
    assert_eq!(t["oracle_mismatches"], 0);
    assert_eq!(t["degenerate"], 1);
    assert_eq!(v["flags"]["ambiguous"], true);
}

#[test]
fn sweep_output_independent_of_jobs() {
    for sweep in [&["sweep", "kisin", "-q", "3", "-f", "1,2"][..], &["sweep", "bm", "--f-max", "4"]] {
        let a = oneadic(&[&["--format", "tsv", "--jobs", "1"], sweep].concat());
        let b = oneadic(&[&["--format", "tsv", "--jobs", "7"], sweep].concat());
        assert_eq!(a, b);
    }
}

#[test]
fn acceptance_filter_and_fault() {
    let (code, v) = json(&["acceptance", "--filter", "serre"]);
    assert_eq!(code, exit::OK);
    assert_eq!(v["result"]["total"], 1);
    let (code, v) = json(&["acceptance", "--filter", "bm-identity", "--inject-fault", "wrong-multiplicity"]);
    assert_eq!(code, exit::ACCEPTANCE_FAILURE);
    assert_eq!(v["result"]["failed"], serde_json::json!(["bm-identity"]));
}

#[test]
fn reports_carry_the_documented_result_keys() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).expect("schema parses");
    let required = |command: &str| -> Vec<String> {
        schema["allOf"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["if"]["properties"]["command"]["const"] == command)
            .map(|c| {
                let keys = c["then"]["properties"]["result"]["required"].as_array().unwrap();
                keys.iter().map(|k| k.as_str().unwrap().to_string()).collect()
            })
            .unwrap_or_else(|| panic!("no schema entry for {command}"))
    };
    let cases: &[&[&str]] = &[
        &["gene", "-p", "3", "-f", "1", "--h", "5", "--gamma", "0"],
        &["weights", "--jii", "0b11", "-f", "3"],
        &["kisin", "--coeffs", "10", "-q", "3"],
        &["defring", "--jii", "1", "-f", "2"],
        &["serre", "-n", "2", "-f", "1", "-p", "3"],
        &["tame", "--s", "2,1;1,2", "--mu", "1,0;0,0", "-p", "3"],
        &["card-gl", "-n", "3", "-q", "2"],
        &["f1", "aut", "-d", "3"],
        &["f1", "gl", "-d", "2", "-n", "2"],
        &["f1", "adjoint", "--v", "1", "--w", "2", "-n", "1"],
        &["f1", "sym", "--degrees", "0,1"],
        &["f1", "frob", "--kind", "additive", "-d", "1", "-n", "4"],
        &["f1", "glmod", "--monoid", "Z", "-d", "1", "-B", "1"],
        &["galois", "kn", "-n", "2"],
        &["galois", "fix", "-n", "2"],
        &["galois", "unramified", "-n", "2"],
        &["galois", "tame", "-p", "2", "-n", "2"],
        &["galois", "tame-compare", "-n", "3", "-p", "2"],
        &["galois", "tower", "-e", "3", "--r", "1/3"],
        &["sweep", "gene", "-p", "2", "-f", "1"],
        &["sweep", "bm", "--f-max", "2", "--jii-max", "1"],
        &["sweep", "serre", "-p", "3", "-f", "1"],
        &["sweep", "kisin", "-q", "3", "-f", "1"],
        &["acceptance", "--filter", "sym"],
    ];
    for args in cases {
        let (_, v) = json(args);
        let command = v["command"].as_str().unwrap();
        for key in required(command) {
            assert!(v["result"].get(&key).is_some(), "{command}: missing result.{key}");
        }
        for key in ["degenerate", "ambiguous"] {
            assert!(v["flags"][key].is_boolean());
        }
    }
}
