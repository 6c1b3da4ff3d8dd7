use std::process::{Command, Output};

use serde_json::Value;

fn subtle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subtle")).args(args).env_remove("SUBTLE_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn strip_wall_times(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("wall_time_s");
            m.remove("row_wall_time_s");
            m.values_mut().for_each(strip_wall_times);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_wall_times),
        _ => {}
    }
}

#[test]
fn theta_prints_the_polynomial() {
    let o = subtle(&["theta", "--flavor", "bso", "--n", "7", "--j", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "u2*u3+u5");
}

#[test]
fn ktable_verifies_nine_rows() {
    let o = subtle(&["ktable", "--from", "2", "--to", "10", "--verify", "--format", "json", "--jobs", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r["ok"] == Value::Bool(true)));
    let ns: Vec<u64> = rows.iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, (2..=10).collect::<Vec<u64>>());
    assert!(v["meta"]["version"].is_string());
}

#[test]
fn jbound() {
    let o = subtle(&["jbound", "--n", "11"]);
    assert_eq!(stdout(&o).trim(), "{1,2,4}");
    let o = subtle(&["jbound", "--n", "11", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["lower_bound"], serde_json::json!([1, 2, 4]));
}

#[test]
fn jsonl_streams_one_line_per_row() {
    let o = subtle(&["ktable", "--from", "2", "--to", "5", "--verify", "--format", "jsonl"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l["meta"].is_object()));
}

#[test]
fn csv_has_a_header() {
    let o = subtle(&["torsor", "--n", "7", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("j,relation,verified"));
    assert_eq!(lines.next(), Some("0,u3,true"));
    assert_eq!(lines.next(), Some("1,u2*u3+u5,true"));
}

#[test]
fn exit_codes() {
    // verification failure
    assert_eq!(subtle(&["verify", "--n", "3", "--k", "3"]).status.code(), Some(1));
    assert_eq!(subtle(&["g2check", "--extra", "v8"]).status.code(), Some(1));
    // usage errors
    assert_eq!(subtle(&["theta", "--n", "7"]).status.code(), Some(2));
    assert_eq!(subtle(&["sq", "--n", "5", "--k", "1", "u9"]).status.code(), Some(2));
    let o = subtle(&["present", "--flavor", "bogus", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--flavor"));
    // budget exhaustion names the row
    let o = subtle(&["ktable", "--from", "11", "--to", "11", "--verify", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 11"));
}

#[test]
fn budget_env_var() {
    let o = Command::new(env!("CARGO_BIN_EXE_subtle"))
        .args(["ktable", "--from", "11", "--to", "11", "--verify"])
        .env("SUBTLE_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn repeated_runs_agree() {
    let args = ["present", "--flavor", "bspin", "--n", "6", "--format", "json"];
    let mut a: Value = serde_json::from_str(&stdout(&subtle(&args))).unwrap();
    let mut b: Value = serde_json::from_str(&stdout(&subtle(&args))).unwrap();
    strip_wall_times(&mut a);
    strip_wall_times(&mut b);
    assert_eq!(a, b);
    let args = ["ktable", "--from", "2", "--to", "8", "--verify", "--format", "csv", "--jobs", "4"];
    assert_eq!(stdout(&subtle(&args)), stdout(&subtle(&args)));
}

#[test]
fn present_json_shape() {
    let o = subtle(&["present", "--flavor", "bspin", "--n", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["result"];
    assert_eq!(r["family"], "BSpin");
    assert_eq!(r["k"], 2);
    let names: Vec<&str> = r["generators"].as_array().unwrap().iter().map(|g| g["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["t", "u2", "u3", "v4"]);
    assert_eq!(r["relations"], serde_json::json!(["u2", "u3"]));
}

#[test]
fn radical_of_a_matrix() {
    let o = subtle(&["radical", "--matrix", "[[1,0],[1,0]]", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["radical"], serde_json::json!([[0, 1]]));
    assert_eq!(subtle(&["radical", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn sq_in_topological_flavor() {
    let o = subtle(&["sq", "--flavor", "top", "--n", "5", "--k", "2", "w3"]);
    assert_eq!(stdout(&o).trim(), "w2*w3+w5");
}

#[test]
fn htable_agrees() {
    let o = subtle(&["htable", "--from", "2", "--to", "200", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 200);
}
