use std::process::{Command, Output};

fn rtamari(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rtamari"))
        .args(args)
        .env_remove("TAMARI_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn path_count() {
    let o = rtamari(&["paths", "--n", "3", "--r", "2", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn path_list_json() {
    let o = rtamari(&["paths", "--n", "3", "--r", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let paths: Vec<String> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["path"].as_array().unwrap().iter().map(|x| x.to_string()).collect())
        .collect();
    assert_eq!(paths, ["000", "001", "002", "011", "012"]);
}

#[test]
fn verify_intervals_passes() {
    let o = rtamari(&["verify", "intervals", "--n", "3", "--r", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("13 = 13"));
}

#[test]
fn verify_json_reports() {
    let o = rtamari(&["verify", "dimension", "--n", "3", "--r", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"pass\": true"));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["rhs"], "189");
    assert!(v[0].get("runtime").is_none());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(rtamari(&["bogus"]).status.code(), Some(2));
    assert_eq!(rtamari(&["paths", "--n", "0"]).status.code(), Some(2));
    assert_eq!(rtamari(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(rtamari(&["verify", "trivial_part", "--n", "3", "--r", "1"]).status.code(), Some(2));
    assert_eq!(rtamari(&["paths", "--n", "3", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(rtamari(&["--help"]).status.code(), Some(0));
}

#[test]
fn hilbert_text_for_two() {
    let o = rtamari(&["harmonics", "--n", "2", "--hilbert"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 + q1 + q2 + q3"));
}

#[test]
fn harmonics_json_frobenius() {
    let o = rtamari(&["harmonics", "--n", "3", "--frobenius", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 32);
    assert_eq!(v["frobenius"]["S[111]"]["schur"], "s11 + s3");
    assert_eq!(v["frobenius"]["S[21]"]["schur"], "s1 + s2");
}

#[test]
fn nabla3_specialization() {
    let o = rtamari(&["nabla3", "--r", "1", "--at-q111"]);
    assert_eq!(stdout(&o).trim(), "1*S3 + 9*S21 + 13*S111");
}

#[test]
fn parking_rows_and_counts() {
    let o = rtamari(&["parking", "--n", "3", "--r", "2", "--count"]);
    assert_eq!(stdout(&o).trim(), "49");
    let o = rtamari(&["parking", "--n", "3", "--r", "1", "--shape", "001", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    for row in v.as_array().unwrap() {
        let keys: Vec<&String> = row.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["co", "dinv", "f", "shape"]);
    }
    assert_eq!(rtamari(&["parking", "--n", "3", "--shape", "0011"]).status.code(), Some(2));
}

#[test]
fn output_independent_of_jobs() {
    let one = rtamari(&["verify", "counts", "frobenius", "--n", "3", "--jobs", "1", "--format", "json"]);
    let four = rtamari(&["verify", "counts", "frobenius", "--n", "3", "--jobs", "4", "--format", "json"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn tamari_uses_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_rtamari"))
        .args(["tamari", "--n", "4", "--r", "1", "--format", "json"])
        .env("TAMARI_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["interval_count"], 68);
    assert_eq!(v["elements"].as_array().unwrap().len(), 14);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
}
