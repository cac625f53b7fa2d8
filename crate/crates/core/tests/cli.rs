use std::process::Command;

use serde_json::Value;

fn bcring(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bcring")).args(args).output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn solve_left_bc_lists_witnesses() {
    let (code, v, _) = bcring(&["solve", "--ring", "zmod:8", "--kind", "left_bc", "--a", "5", "--b", "0", "--c", "2", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["exists"], true);
    assert_eq!(v["all"], serde_json::json!(["0", "2", "4", "6"]));
    let eqs: Vec<&str> = v["certificate"].as_array().unwrap().iter().map(|c| c["equation"].as_str().unwrap()).collect();
    assert!(eqs.contains(&"y·a·b = b"));
}

#[test]
fn solve_moore_penrose_and_missing_inverse() {
    let (code, v, _) = bcring(&["solve", "--ring", "zmod:5", "--kind", "moore_penrose", "--a", "2"]);
    assert_eq!((code, v["witness"].as_str()), (0, Some("3")));
    let (code, v, _) = bcring(&["solve", "--ring", "zmod:6", "--kind", "left_bc", "--a", "2", "--b", "3", "--c", "3"]);
    assert_eq!((code, &v["exists"], &v["witness"]), (3, &Value::Bool(false), &Value::Null));
}

#[test]
fn solve_delta_and_along() {
    let (code, v, _) = bcring(&["solve", "--ring", "zmod:6", "--kind", "delta", "--delta", "1,3", "--a", "2", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["all"], serde_json::json!(["2", "5"]));
    let (code, _, _) = bcring(&["solve", "--ring", "zmod:6", "--kind", "mary_left", "--a", "3", "--d", "2"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors_go_to_stderr() {
    let (code, v, err) = bcring(&["solve", "--ring", "zmod:0", "--kind", "group", "--a", "1"]);
    assert_eq!((code, v), (2, Value::Null));
    assert!(err.starts_with("error:"));
    let (code, _, _) = bcring(&["solve", "--ring", "zmod:6", "--kind", "nosuch", "--a", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = bcring(&["check", "--claim", "nosuch", "--ring", "zmod:6"]);
    assert_eq!(code, 2);
    let (code, _, _) = bcring(&["check", "--claim", "existence-left-bc", "--ring", "zmod:6", "--mode", "sample:x"]);
    assert_eq!(code, 2);
    let (code, _, _) = bcring(&["hunt", "--claim", "existence-left-bc", "--rings", "zmod:6"]);
    assert_eq!(code, 2);
}

#[test]
fn check_reports() {
    let (code, v, _) = bcring(&["check", "--claim", "existence-left-bc", "--ring", "zmod:8", "--mode", "exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!((v["verdict"].as_str(), v["cases"].as_u64()), (Some("pass"), Some(512)));
    let (code, v, _) = bcring(&["check", "--claim", "five-way-left", "--ring", "mat:2:zmod:2", "--mode", "sample:3:200"]);
    assert_eq!((code, v["seed"].as_u64(), v["cases"].as_u64()), (0, Some(3), Some(200)));
}

#[test]
fn check_is_deterministic_across_workers() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let args = ["check", "--claim", "product-witness-relations-arbitrary", "--ring", "zmod:4"];
    let (_, one, _) = bcring(&[&args[..], &["--workers", "1"]].concat());
    let (_, three, _) = bcring(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(strip(one), strip(three));
}

#[test]
fn hunt_outcomes() {
    let (code, v, _) = bcring(&["hunt", "--claim", "witness-inequality-left-vs-rightann", "--rings", "zmod:8"]);
    assert_eq!((code, v["ring"].as_str()), (0, Some("zmod:8")));
    let (code, v, _) = bcring(&["hunt", "--claim", "converse-annihilator-to-onesided", "--rings", "zmod:2..6,mat:2:zmod:2"]);
    assert_eq!((code, &v["found"]), (3, &Value::Bool(false)));
}
