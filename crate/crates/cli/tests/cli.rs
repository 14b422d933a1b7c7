use std::process::{Command, Output};

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/golden_tables.txt");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lietower"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn roots_json_lists_counts() {
    let out = run(&["roots", "--type", "e6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["type"], "E6");
    assert_eq!(v["roots"], 72);
    assert_eq!(v["positive"], 36);
}

#[test]
fn verify_without_golden_is_usage_error() {
    let out = run(&["verify", "--type", "e6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_command_and_bad_type_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "e8"]).status.code(), Some(2));
}

#[test]
fn missing_golden_file_exits_two() {
    let out = run(&["verify", "--type", "e6", "--golden", "/nonexistent/tables.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_e7_json_all_pass() {
    let out = run(&[
        "verify", "--type", "e7", "--golden", GOLDEN, "--format", "json", "--fast",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["type"], "E7");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["flagged"], 0);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 3);
    for c in v["checks"].as_array().unwrap() {
        for k in ["name", "anchor", "expected", "actual", "status"] {
            assert!(c.get(k).is_some(), "check lacks {k}");
        }
    }
}

#[test]
fn both_types_give_an_array() {
    let out = run(&["report", "--type", "both", "--format", "json", "--fast"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let types: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["type"].as_str().unwrap())
        .collect();
    assert_eq!(types, ["E6", "E7"]);
}

#[test]
fn report_output_is_byte_identical_across_runs() {
    let args = ["report", "--type", "e6", "--format", "json", "--fast"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn corrupted_table_fails_tables_command() {
    let text = std::fs::read_to_string(GOLDEN).unwrap();
    let corrupted = text.replacen("[E6] W\n0 * * * * 1", "[E6] W\n1 * * * * 1", 1);
    assert_ne!(corrupted, text);
    let path = std::env::temp_dir().join(format!("lietower-corrupt-{}.txt", std::process::id()));
    std::fs::write(&path, corrupted).unwrap();
    let out = run(&["tables", "--type", "e6", "--golden", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("MISMATCH"));
}

#[test]
fn text_tower_mentions_layers() {
    let out = run(&["tower", "--type", "e7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dim 33") && text.contains("dim 17") && text.contains("dim 9"));
}
