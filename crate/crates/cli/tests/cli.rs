use std::io::Write;
use std::process::{Command, Output, Stdio};

const FIG3: &str = "3 1 4 5 2\n";
const P6: &str = "6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n";
const K13: &str = "4 3\n1 2\n1 3\n1 4\n";

fn p3c(args: &[&str], stdin: &str) -> Output {
    p3c_env(args, stdin, &[])
}

fn p3c_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_p3c"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn hull_of_five_segment_diagram() {
    let o = p3c(&["hull", "-", "--set", "1,2,3"], FIG3);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("hull {1,2,3,5}\n"));
    let o = p3c(&["--json", "hull", "-", "--set", "1,2,3"], FIG3);
    let v = json(&o);
    assert_eq!(v["hull"], serde_json::json!([1, 2, 3, 5]));
    assert_eq!(v["parents"]["5"], serde_json::json!([1, 3]));
    let o = p3c(&["hull", "-", "--set", "1,3"], "3 2\n1 2\n2 3\n");
    assert!(stdout(&o).starts_with("hull {1,2,3}\n"));
    let o = p3c(&["hull", "-", "--set", "4"], P6);
    assert!(stdout(&o).starts_with("hull {4}\n"));
}

#[test]
fn check_reports_violators() {
    let o = p3c(&["check", "-", "--set", "1,2,3,4"], FIG3);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("dependent: violator 1"));
    let o = p3c(&["check", "-", "--set", "1,2,5,6"], P6);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("independent"));
    let o = p3c(&["check", "-", "--set", "2,4"], K13);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn boundary_of_redundant_set_is_empty() {
    let o = p3c(&["boundary", "-", "--set", "1,2,5,6"], P6);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("boundary {}"));
    assert!(out.contains("redundant"));
}

#[test]
fn beta_c_dispatch() {
    let o = p3c(&["beta-c", "-"], P6);
    assert!(stdout(&o).starts_with("beta_c 4 (solver path)"));
    let o = p3c(&["beta-c", "-", "--solver", "permutation"], FIG3);
    assert!(stdout(&o).starts_with("beta_c 3 (solver permutation)"));
    let o = p3c(&["beta-c", "-"], K13);
    assert!(stdout(&o).starts_with("beta_c 3 (solver tree)"));
    let o = p3c(&["beta-c", "-", "--solver", "cycle"], "4 4\n1 2\n2 3\n3 4\n4 1\n");
    assert!(stdout(&o).starts_with("beta_c 2 (solver cycle)"));
    for mode in ["state", "witness", "oracle-check"] {
        let o = p3c(
            &["beta-c", "-", "--solver", "permutation", "--mode", mode],
            "3 5 1 7 2 9 4 10 6 8\n",
        );
        assert_eq!(o.status.code(), Some(0), "{mode}");
        assert!(stdout(&o).starts_with("beta_c 4 (solver permutation)"), "{mode}");
    }
}

#[test]
fn caratheodory_of_an_edge() {
    // {1, 2} generates nothing new, so it is redundant
    let o = p3c(&["caratheodory", "-"], "2 1\n1 2\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("caratheodory 1"));
}

#[test]
fn exit_codes() {
    assert_eq!(p3c(&["hull", "-", "--set", "1"], "3 2\n1 2\n").status.code(), Some(2));
    assert_eq!(p3c(&["hull", "-", "--set", "9"], P6).status.code(), Some(3));
    assert_eq!(p3c(&["hull", "-", "--set", "a"], P6).status.code(), Some(3));
    assert_eq!(
        p3c(&["beta-c", "-", "--solver", "permutation"], P6).status.code(),
        Some(4)
    );
    assert_eq!(
        p3c(&["beta-c", "-", "--solver", "tree"], "4 4\n1 2\n2 3\n3 4\n4 1\n")
            .status
            .code(),
        Some(4)
    );
    assert_eq!(p3c(&["gen", "wheel", "5"], "").status.code(), Some(4));
    let o = p3c_env(&["beta-c", "-", "--solver", "oracle"], P6, &[("P3C_ORACLE_MAX", "5")]);
    assert_eq!(o.status.code(), Some(5));
    let o = p3c_env(&["caratheodory", "-"], P6, &[("P3C_ORACLE_MAX", "5")]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("p3c: "));
}

#[test]
fn json_reports_reverify() {
    let graph = p3c(&["gen", "random-perm", "30", "--seed", "3"], "");
    let text = stdout(&graph);
    let v = json(&p3c(&["--json", "beta-c", "-"], &text));
    let witness: Vec<usize> = serde_json::from_value(v["witness"].clone()).unwrap();
    assert_eq!(v["value"].as_u64().unwrap() as usize, witness.len());
    let set: Vec<String> = witness.iter().map(usize::to_string).collect();
    let o = p3c(&["--json", "check", "-", "--set", &set.join(",")], &text);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["independent"], serde_json::json!(true));
}

#[test]
fn generators_emit_input_formats() {
    assert_eq!(
        stdout(&p3c(&["gen", "path", "6"], "")),
        "6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n"
    );
    let a = stdout(&p3c(&["gen", "random-tree", "15", "--seed", "9"], ""));
    let b = stdout(&p3c(&["gen", "random-tree", "15", "--seed", "9"], ""));
    assert_eq!(a, b);
    let o = p3c(&["beta-c", "-"], &stdout(&p3c(&["gen", "spider", "3", "2"], "")));
    assert!(stdout(&o).starts_with("beta_c 5 (solver tree)"));
}

#[test]
fn validate_and_bench_rows() {
    let dir = std::env::temp_dir().join("p3c-cli-fixtures");
    let o = p3c(
        &[
            "validate",
            "permutation",
            "--max-n",
            "7",
            "--fixtures",
            dir.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("permutation n=7: 5040/5040 ok"));
    let o = p3c(&["validate", "cograph", "--max-n", "6", "--count", "10"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = p3c(&["--json", "bench", "random-perm", "20,30,40"], "");
    let rows = json(&o)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 3);
}
