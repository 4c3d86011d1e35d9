use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_detbetti"));
    cmd.env_remove("NO_COLOR");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_input(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn veronese_json_is_byte_exact() {
    let dir = TempDir::new().unwrap();
    let input = write_input(&dir, "v.json", r#"{"kind":"symmetric","two_a":[1,1,1]}"#);
    let o = run(&["table", &input, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"codim\":3,\"betti\":[[0,0,1],[1,2,6],[2,3,8],[3,4,3]],\"m\":[2,3,4],\"M\":[2,3,4],\"total\":[6,8,3],\"pure\":true,\"multiplicity\":4}\n"
    );
}

#[test]
fn table_examples() {
    let dir = TempDir::new().unwrap();
    let linear = write_input(
        &dir,
        "l.json",
        r#"{"kind":"standard","b":[0,0],"a":[1,1,1]}"#,
    );
    let v: Value =
        serde_json::from_str(&stdout(&run(&["table", &linear, "--format", "json"]))).unwrap();
    assert_eq!(v["total"], serde_json::json!([3, 2]));
    assert_eq!(v["multiplicity"], 3);

    let divisor = write_input(&dir, "d.json", r#"{"kind":"divisor","c":2,"t":2,"p":1}"#);
    let v: Value =
        serde_json::from_str(&stdout(&run(&["table", &divisor, "--format", "json"]))).unwrap();
    assert_eq!(
        v["betti"],
        serde_json::json!([[0, 0, 1], [1, 2, 2], [2, 4, 1]])
    );
    assert_eq!(v["multiplicity"], 4);
    assert_eq!(v["notes"][0]["kind"], "divisor_last_shift");
}

#[test]
fn square_table_carries_both_middle_totals() {
    let dir = TempDir::new().unwrap();
    let input = write_input(&dir, "s.json", r#"{"kind":"square","b":[0,0],"a":[1,1]}"#);
    let v: Value =
        serde_json::from_str(&stdout(&run(&["table", &input, "--format", "json"]))).unwrap();
    let note = &v["notes"][0];
    assert_eq!(note["kind"], "gn_middle_total");
    assert_eq!(
        (note["printed"].as_u64(), note["rank"].as_u64()),
        (Some(2), Some(6))
    );
    let ascii = stdout(&run(&["table", &input]));
    assert!(ascii.contains("note: {\"kind\":\"gn_middle_total\""));
}

fn triples_from_json(text: &str) -> BTreeMap<(usize, i64), u64> {
    let v: Value = serde_json::from_str(text).unwrap();
    v["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let e = e.as_array().unwrap();
            (
                (e[0].as_u64().unwrap() as usize, e[1].as_i64().unwrap()),
                e[2].as_u64().unwrap(),
            )
        })
        .collect()
}

fn triples_from_csv(text: &str) -> BTreeMap<(usize, i64), u64> {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,count"));
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                (f[0].parse().unwrap(), f[1].parse().unwrap()),
                f[2].parse().unwrap(),
            )
        })
        .collect()
}

fn triples_from_ascii(text: &str) -> BTreeMap<(usize, i64), u64> {
    let mut lines = text.lines();
    let header: Vec<i64> = lines
        .next()
        .unwrap()
        .split_whitespace()
        .skip(1)
        .map(|s| s.parse().unwrap())
        .collect();
    let mut out = BTreeMap::new();
    for line in lines.take_while(|l| !l.starts_with("total")) {
        let (label, cells) = line.split_once(':').unwrap();
        let i: usize = label.trim().parse().unwrap();
        for (j, cell) in header.iter().zip(cells.split_whitespace()) {
            if cell != "." {
                out.insert((i, *j), cell.parse().unwrap());
            }
        }
    }
    out
}

#[test]
fn renderings_agree() {
    let dir = TempDir::new().unwrap();
    let inputs = [
        r#"{"kind":"standard","b":[1,0],"a":[2,2,3]}"#,
        r#"{"kind":"symmetric","two_a":[1,3,5]}"#,
        r#"{"kind":"square","b":[0,1],"a":[2,3]}"#,
        r#"{"kind":"divisor","c":4,"t":3,"p":2}"#,
        r#"{"kind":"ci_power","d1":2,"d2":3,"s":3}"#,
    ];
    for (k, body) in inputs.iter().enumerate() {
        let input = write_input(&dir, &format!("in{k}.json"), body);
        let json = triples_from_json(&stdout(&run(&["table", &input, "--format", "json"])));
        let csv = triples_from_csv(&stdout(&run(&["table", &input, "--format", "csv"])));
        let ascii = triples_from_ascii(&stdout(&run(&["table", &input, "--format", "ascii"])));
        assert_eq!(json, csv, "{body}");
        assert_eq!(json, ascii, "{body}");
    }
}

#[test]
fn raw_table_round_trip() {
    let dir = TempDir::new().unwrap();
    let inputs = [
        r#"{"kind":"standard","b":[0,-1,-3],"a":[0,1,1,2,4]}"#,
        r#"{"kind":"symmetric","two_a":[2,2,4,6]}"#,
        r#"{"kind":"square","b":[0,0,1],"a":[2,2,3]}"#,
        r#"{"kind":"divisor","c":5,"t":4,"p":3}"#,
    ];
    let keys = ["codim", "betti", "m", "M", "total", "pure", "multiplicity"];
    for (k, body) in inputs.iter().enumerate() {
        let input = write_input(&dir, &format!("in{k}.json"), body);
        let first = stdout(&run(&["table", &input, "--format", "json"]));
        let raw = write_input(&dir, &format!("raw{k}.json"), &first);
        let o = run(&["table", &raw, "--format", "json", "--raw-table"]);
        assert_eq!(o.status.code(), Some(0));
        let (a, b): (Value, Value) = (
            serde_json::from_str(&first).unwrap(),
            serde_json::from_str(&stdout(&o)).unwrap(),
        );
        for key in keys {
            assert_eq!(a[key], b[key], "{body}: {key}");
        }
    }
}

#[test]
fn check_examples_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let mixed = write_input(
        &dir,
        "m.json",
        r#"{"kind":"standard","b":[1,0],"a":[2,2,3]}"#,
    );
    let o = run(&["check", &mixed]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["mixed_lower"], serde_json::json!(["5/3", "1"]));
    assert_eq!(v["factorial_upper"], serde_json::json!(["6", "4"]));
    assert_eq!(v["multiplicity"], 10);
    assert_eq!(v["mult_bounds"], serde_json::json!(["15/2", "12"]));

    let veronese = write_input(&dir, "v.json", r#"{"kind":"symmetric","two_a":[1,1,1]}"#);
    let v: Value = serde_json::from_str(&stdout(&run(&["check", &veronese]))).unwrap();
    assert_eq!(v["mixed_tight"], serde_json::json!([true, true, true]));
    assert_eq!(v["factorial_tight"], serde_json::json!([true, true, true]));

    let koszul = write_input(&dir, "k.json", r#"{"kind":"square","b":[0,0],"a":[1,1]}"#);
    let o = run(&["check", &koszul]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["beta"], serde_json::json!([4, 6, 4, 1]));
    assert_eq!(v["pure"], true);
}

#[test]
fn check_reports_violations_with_exit_two() {
    // Hilbert-consistent numerics that no determinantal ideal realizes:
    // beta_1 = 3 exceeds the factorial bound M_2 = 2
    let dir = TempDir::new().unwrap();
    let raw = write_input(
        &dir,
        "r.json",
        r#"{"codim":2,"betti":[[1,1,2],[1,2,1],[2,2,2]]}"#,
    );
    let o = run(&["check", &raw, "--raw-table"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_ok"], false);
    assert_eq!(v["factorial_upper_ok"], serde_json::json!([false, true]));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_inputs_exit_one_with_one_line() {
    let dir = TempDir::new().unwrap();
    let cases = [
        r#"{"kind":"standard","b":[0,1],"a":[1,1,1]}"#,
        r#"{"kind":"symmetric","two_a":[1,2]}"#,
        r#"{"kind":"divisor","c":0,"t":2,"p":1}"#,
        r#"{"kind":"cubic"}"#,
        "not json",
    ];
    for (k, body) in cases.iter().enumerate() {
        let input = write_input(&dir, &format!("bad{k}.json"), body);
        let o = run(&["table", &input]);
        assert_eq!(o.status.code(), Some(1), "{body}");
        assert_eq!(
            String::from_utf8(o.stderr).unwrap().lines().count(),
            1,
            "{body}"
        );
    }
    let raw = write_input(&dir, "raw.json", r#"{"codim":2,"betti":[[1,2,3],[2,3,1]]}"#);
    assert_eq!(run(&["table", &raw, "--raw-table"]).status.code(), Some(1));
}

#[test]
fn io_errors_exit_three() {
    let o = run(&["check", "/nonexistent/input.json"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&[
        "scan",
        "--family",
        "divisor",
        "--out",
        "/nonexistent/dir/out.jsonl",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bad_flags_exit_one() {
    assert_eq!(run(&["scan"]).status.code(), Some(1));
    assert_eq!(
        run(&["scan", "--family", "square", "--t-max", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["table"]).status.code(), Some(1));
    assert_eq!(
        run(&["table", "x.json", "--format", "xml"]).status.code(),
        Some(1)
    );
}

fn scan_json(args: &[&str]) -> (i32, Value, String) {
    let o = run(args);
    let text = stdout(&o);
    (
        o.status.code().unwrap(),
        serde_json::from_str(&text).unwrap(),
        text,
    )
}

#[test]
fn scan_examples() {
    let (code, v, _) = scan_json(&[
        "scan",
        "--family",
        "standard",
        "--t-max",
        "2",
        "--c-max",
        "3",
        "--max-entry",
        "3",
    ]);
    assert_eq!((code, v["violations"].as_u64()), (0, Some(0)));

    let (code, v, _) = scan_json(&[
        "scan",
        "--family",
        "square",
        "--t-max",
        "3",
        "--max-entry",
        "2",
    ]);
    assert_eq!((code, v["violations"].as_u64()), (0, Some(0)));
    let notes = v["notes"].as_array().unwrap();
    assert_eq!(notes.len(), 1);
    assert_eq!(notes[0]["note"]["kind"], "gn_middle_total");

    let (code, v, _) = scan_json(&[
        "scan", "--family", "divisor", "--c-max", "6", "--t-max", "6",
    ]);
    assert_eq!((code, v["violations"].as_u64()), (0, Some(0)));
    assert_eq!(v["degree_checked"], v["instances"]);
    assert_eq!(v["degree_mismatches"], serde_json::json!([]));
}

fn scan_with_out(dir: &Path, jobs: &str) -> (String, String) {
    let out = dir.join(format!("records{jobs}.jsonl"));
    let o = run(&[
        "scan",
        "--family",
        "standard",
        "--t-max",
        "3",
        "--c-max",
        "3",
        "--max-entry",
        "3",
        "--jobs",
        jobs,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    (stdout(&o), fs::read_to_string(out).unwrap())
}

#[test]
fn scan_output_is_independent_of_jobs() {
    let dir = TempDir::new().unwrap();
    let (report1, records1) = scan_with_out(dir.path(), "1");
    let (report4, records4) = scan_with_out(dir.path(), "4");
    assert_eq!(report1, report4);
    assert_eq!(records1, records4);
    let v: Value = serde_json::from_str(&report1).unwrap();
    assert_eq!(
        records1.lines().count() as u64,
        v["instances"].as_u64().unwrap()
    );
    let first = records1.lines().next().unwrap();
    let keys: Vec<&str> = [
        "params",
        "total",
        "m",
        "M",
        "mixed_lower",
        "factorial_upper",
        "ok",
        "tight",
    ]
    .to_vec();
    let mut pos = 0;
    for key in keys {
        let at = first[pos..].find(&format!("\"{key}\":")).expect(key) + pos;
        pos = at;
    }
    assert!(first.starts_with(r#"{"params":{"kind":"standard","#));
}

#[test]
fn scan_budget_truncation_is_reported() {
    let (code, v, _) = scan_json(&[
        "scan", "--family", "divisor", "--c-max", "6", "--t-max", "6", "--budget", "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["instances"], 5);
    assert_eq!(v["truncated"], true);
}

#[test]
fn ascii_respects_no_color() {
    let dir = TempDir::new().unwrap();
    let input = write_input(&dir, "v.json", r#"{"kind":"symmetric","two_a":[1,1,1]}"#);
    let o = bin()
        .args(["table", &input])
        .env("NO_COLOR", "1")
        .output()
        .unwrap();
    assert!(!stdout(&o).contains('\x1b'));
    // output to a pipe is never colored either
    assert!(!stdout(&run(&["table", &input])).contains('\x1b'));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = bin()
        .args(["table", "-", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"kind":"ci_power","d1":1,"d2":1,"s":2}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "i,j,count\n0,0,1\n1,2,3\n2,3,2\n");
}

#[test]
fn selftest_quick_names_failures() {
    let o = run(&["selftest", "--quick"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("[PASS] 1 ")));
    assert_eq!(text.lines().filter(|l| l.starts_with('[')).count(), 10);
    let code = o.status.code().unwrap();
    assert_eq!(code == 0, text.ends_with("PASS\n"));

    let o = run(&["selftest", "--quick", "--corrupt-golden"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("[FAIL] 1 ")));
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("FAIL: criteria 1"), "{last}");
}
