use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn treeforge(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treeforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = treeforge(&full, stdin);
    (serde_json::from_slice(&o.stdout).expect("valid report"), o.status.code().unwrap())
}

const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn count_k4_from_stdin() {
    let o = treeforge(&["count", "-", "--method", "both"], Some(K4));
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "16");
}

#[test]
fn count_graph6_cycle() {
    let o = treeforge(&["count", "-"], Some("Dhc\n"));
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn count_petersen_from_file() {
    let dir = std::env::temp_dir().join(format!("treeforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("petersen.txt");
    let mut text = String::new();
    for i in 0..5 {
        text += &format!("{} {}\n{} {}\n{} {}\n", i, (i + 1) % 5, i, i + 5, i + 5, (i + 2) % 5 + 5);
    }
    std::fs::write(&path, text).unwrap();
    let (report, code) = json(&["count", path.to_str().unwrap(), "--method", "dc"], None);
    assert_eq!(code, 0);
    assert_eq!(report["outputs"]["tau"], "2000");
    assert_eq!(report["inputs"]["vertices"], 10);
}

#[test]
fn disconnected_graph_warns_and_counts_zero() {
    let o = treeforge(&["count", "-"], Some("p 4\n0 1\n2 3\n"));
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    assert!(String::from_utf8_lossy(&o.stderr).contains("not connected"));
}

#[test]
fn malformed_input_reports_position() {
    let o = treeforge(&["count", "-"], Some("0 1\n1 q\n"));
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn construct_uses_table_variant_for_30() {
    let (report, code) = json(&["construct", "30"], None);
    assert_eq!(code, 0);
    let w = &report["outputs"]["witness"];
    assert_eq!(w["edges"], 8);
    assert_eq!(w["vertices"], 6);
    assert_eq!(w["tau"], "30");
    assert_eq!(w["strategy"], "VARIANT_TABLE");
    assert_eq!(w["edge_list"].as_array().unwrap().len(), 8);
}

#[test]
fn construct_small_n_falls_back_to_cycle() {
    let (report, _) = json(&["construct", "4"], None);
    assert_eq!(report["outputs"]["witness"]["strategy"], "CYCLE_FALLBACK");
    assert_eq!(report["outputs"]["bounds"]["exception_class"], "BETA_EXCEPTIONAL");
}

#[test]
fn construct_from_spec_string() {
    let (report, code) = json(&["construct", "v1:3,1,4,1;2"], None);
    assert_eq!(code, 0);
    assert_eq!(report["outputs"]["tau"], "37");
    assert_eq!(report["outputs"]["closed_form"], "37");
    let o = treeforge(&["construct", "theta:1,1,2"], None);
    assert_eq!(o.status.code(), Some(2), "parallel edges are not simple");
}

#[test]
fn scan_lists_exceptions() {
    let (report, code) = json(&["scan", "3", "100"], None);
    assert_eq!(code, 0);
    let summary = &report["outputs"]["summary"];
    let got: Vec<u64> = summary["vertex_bound_third"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(got, vec![3, 4, 5, 6, 7, 9, 10, 13, 18, 22]);
    assert!(summary["uncertified"].as_array().unwrap().is_empty());
    assert_eq!(report["outputs"]["rows"].as_array().unwrap().len(), 98);
}

#[test]
fn scan_csv_has_header_and_one_row_per_n() {
    let o = treeforge(&["scan", "10", "20"], None);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert!(rows[0].starts_with("n,edges,vertices"));
    assert_eq!(rows.len(), 12);
}

#[test]
fn alpha_and_beta_searches() {
    let (a, _) = json(&["alpha", "8", "--max-vertices", "6"], None);
    assert_eq!(a["outputs"]["value"]["exact"], 4);
    let (b, _) = json(&["beta", "9", "--max-edges", "7"], None);
    assert_eq!(b["outputs"]["value"]["exact"], 6);
}

#[test]
fn fixedpoint_verdicts() {
    let (r, code) = json(&["fixedpoint", "13"], None);
    assert_eq!(code, 0);
    assert_eq!(r["outputs"]["verdict"], "PROVEN");
    let (r, code) = json(&["fixedpoint", "12"], None);
    assert_eq!(code, 1);
    assert_eq!(r["outputs"]["verdict"], "COUNTEREXAMPLE");
}

#[test]
fn idoneal_queries() {
    let (r, _) = json(&["idoneal", "31"], None);
    assert_eq!(r["outputs"]["idoneal"], false);
    let (r, _) = json(&["idoneal", "--scan", "30"], None);
    assert_eq!(r["outputs"]["count"], 21);
}

#[test]
fn verify_table1_passes() {
    let o = treeforge(&["verify", "table1"], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all passed"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let o = treeforge(&["verify", "nonsense"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_has_envelope_fields() {
    let (r, _) = json(&["--jobs", "1", "idoneal", "10"], None);
    for key in ["command", "inputs", "outputs", "elapsed_ms", "version"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}
