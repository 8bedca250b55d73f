use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(args)
        .env_remove("FUSIONKIT_CAPS")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let mut full = vec!["--json", path.to_str().unwrap()];
    full.extend_from_slice(args);
    let out = run(&full);
    let text = std::fs::read_to_string(&path).unwrap();
    (code(&out), serde_json::from_str(&text).unwrap())
}

fn elements(v: &Value) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            e.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect();
    out.sort();
    out
}

#[test]
fn counterexample_passes() {
    let (code, report) = json_of(&["counterexample"]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["statement_id"], "counterexample");
}

#[test]
fn theorem_b_on_first_factor() {
    let (code, report) = json_of(&[
        "verify",
        "theorem-b",
        "--group",
        "s3xs3",
        "--subgroup",
        "G1",
        "--prime",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "pass");
    let computed = &report["computed"];
    let cse = elements(&computed["C_S(E)"]);
    assert_eq!(cse, elements(&computed["C_S(H)"]));
    // the 3-cycles on the second factor, plus the identity
    assert_eq!(
        cse,
        vec![
            vec![0, 1, 2, 3, 4, 5],
            vec![0, 1, 2, 4, 5, 3],
            vec![0, 1, 2, 5, 3, 4]
        ]
    );
}

#[test]
fn theorem_a_hypothesis_violated() {
    let out = run(&["verify", "theorem-a", "--group", "s3", "--prime", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stdout).contains("hypothesis_violated"));
    let (_, report) = json_of(&["verify", "theorem-a", "--group", "s3", "--prime", "2"]);
    assert_eq!(report["hypotheses_ok"], false);
    assert!(report["timing_ms"].is_number());
}

#[test]
fn group_file_argument() {
    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/data/s3xs3.json");
    let out = run(&[
        "verify",
        "lemma1",
        "--group",
        file,
        "--subgroup",
        "S",
        "--prime",
        "3",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&[
        "verify",
        "corollary",
        "--group",
        file,
        "--subgroup",
        "G1",
        "--prime",
        "3",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn trace_accepts_cycle_notation() {
    let out = run(&[
        "trace",
        "--group",
        "s3xs3",
        "--subgroup",
        "G1",
        "--prime",
        "3",
        "--element",
        "(3,4,5)",
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&[
        "trace",
        "--group",
        "s3xs3",
        "--subgroup",
        "G1",
        "--prime",
        "3",
        "--element",
        "(0,1)",
    ]);
    assert_eq!(code(&out), 2, "an element outside S is a contract error");
}

#[test]
fn compute_outputs_json() {
    let (code_zf, v) = json_of(&["compute", "zf", "--group", "d8", "--prime", "2"]);
    assert_eq!(code_zf, 0);
    assert_eq!(v["command"], "zf");
    assert_eq!(
        elements(&v["computed"]["Z(F)"]),
        vec![vec![0, 1, 2, 3], vec![2, 3, 0, 1]]
    );
    let out = run(&[
        "compute",
        "cse",
        "--group",
        "s4",
        "--subgroup",
        "A4",
        "--prime",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["compute", "fusion-report", "--group", "q8", "--prime", "2"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(
        code(&run(&[
            "verify",
            "theorem-z",
            "--group",
            "s3",
            "--prime",
            "3"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "theorem-a",
            "--group",
            "s3",
            "--prime",
            "4"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "theorem-a",
            "--group",
            "nope",
            "--prime",
            "3"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify",
            "theorem-b",
            "--group",
            "s3",
            "--prime",
            "3"
        ])),
        2
    );
    let out = Command::new(env!("CARGO_BIN_EXE_fusionkit"))
        .args(["verify", "theorem-a", "--group", "s3", "--prime", "3"])
        .env("FUSIONKIT_CAPS", "garbage")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn catalog_filter_runs_matching_entries() {
    let (code, v) = json_of(&["catalog", "run", "--filter", "s3xs3/H/p=3", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(v["summary"]["mismatched"] == 0, "{v}");
    let out = run(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("s3xs3/G1/p=3"));
}
