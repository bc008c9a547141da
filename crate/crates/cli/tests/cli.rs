use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn barhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_barhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_action_passes() {
    let o = barhom(&["verify", "action", "--group", "cyclic:2", "--module", "trivial-int", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("30/30 passed"));
}

#[test]
fn cohomology_prints_invariants() {
    let o = barhom(&["cohomology", "--group", "cyclic:4", "--module", "trivial-int", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Z/4");
    let o = barhom(&["cohomology", "--group", "cyclic:3", "--module", "trivial-int", "--degree", "0"]);
    assert_eq!(stdout(&o).trim(), "Z");
}

#[test]
fn eval_hs_degree_one_indicator() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"degree": 1, "module": "trivial-int", "entries": [{"args": ["g"], "value": [1]}]}"#,
    );
    let o = barhom(&["eval", "hs", "--group", "cyclic:2", "--module", "trivial-int", "--s", "g", "--cochain", &a]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 0);
    assert_eq!(v["entries"][0]["value"], serde_json::json!([1]));
}

#[test]
fn eval_hcup_on_degree_one_pair() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"degree": 1, "module": "trivial-int", "entries": [{"args": ["g"], "value": [1]}]}"#,
    );
    let o = barhom(&["eval", "hcup", "--group", "cyclic:2", "--left", &a, "--right", &a]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 1);
}

#[test]
fn offset_convention_is_announced_and_fails() {
    let o = barhom(&[
        "verify", "cup", "--group", "cyclic:2", "--module", "trivial-int", "--max-total", "2",
        "--sign-convention", "offset",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("notice:"), "{out}");
    assert!(out.contains("first failure: p=1 q=1"));
}

#[test]
fn validation_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(Vec<String>, &str)> = vec![
        (
            vec!["cohomology", "--group", "klein:4", "--module", "trivial-int", "--degree", "1"],
            "--group",
        ),
        (
            vec!["cohomology", "--group", "cyclic:2", "--module", "twisted", "--degree", "1"],
            "--module",
        ),
        (
            vec!["cohomology", "--group", "cyclic:5", "--module", "trivial-int", "--degree", "8"],
            "--degree",
        ),
        (
            vec!["verify", "action", "--group", "cyclic:9", "--module", "trivial-int", "--max-degree", "6"],
            "--max-degree",
        ),
        (
            vec![
                "eval", "hs", "--group", "cyclic:2", "--s", "g", "--cochain",
                &write(dir.path(), "bad.json", r#"{"degree": 1, "module": "trivial-int", "entries": [{"args": [7], "value": [1]}]}"#),
            ],
            "entries[0].args",
        ),
        (
            vec![
                "eval", "hs", "--group", "cyclic:2", "--s", "g", "--cochain",
                &write(dir.path(), "broken.json", "{not json"),
            ],
            "--cochain",
        ),
        (
            vec![
                "eval", "hs", "--group", "cyclic:2", "--s", "g", "--module", "sign", "--cochain",
                &write(dir.path(), "z.json", r#"{"degree": 1, "module": "trivial-int", "entries": []}"#),
            ],
            "--module",
        ),
    ]
    .into_iter()
    .map(|(a, f)| (a.into_iter().map(String::from).collect(), f))
    .collect();
    for (args, field) in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = barhom(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(field), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn json_report_is_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let path = dir.path().join(format!("r{threads}.json"));
        let o = barhom(&[
            "verify", "resolution", "--group", "symmetric:3", "--max-degree", "2", "--threads", threads,
            "--output", path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        outputs.push(fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let v: Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(v["schema"], "barhom.report/1");
    assert_eq!(v["pass"], true);
}

#[test]
fn oracle_compare_passes() {
    let o = barhom(&["oracle", "compare", "--group", "cyclic:3", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
}
