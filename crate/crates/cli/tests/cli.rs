use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../benchmarks/revlib")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lnn-route")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn csv_report_for_directory() {
    let dir = fixtures();
    let o = run(&["report", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("circuit,"));
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().any(|l| l.starts_with("3_17_13,3,0,6,14,14,1,6,20,0,0,14,30.00,passed,recursive,0,")));
}

#[test]
fn markdown_report_for_file() {
    let file = fixtures().join("decod24-v3_46.real");
    let o = run(&["report", file.to_str().unwrap(), "--format", "md", "--order", "exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("| decod24-v3_46 | 4 | 9 | 9 | 54 | 63 | 12 | 21 | 66.67 | passed | 63/21 |"), "{out}");
    assert!(out.contains("Average cost reduction %: 66.67"));
}

#[test]
fn same_seed_same_output() {
    let dir = fixtures();
    let args = ["report", dir.to_str().unwrap(), "--seed", "5", "--weighted-cut", "false"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn emit_lnn_writes_files() {
    let out = tempfile::tempdir().unwrap();
    let file = fixtures().join("3_17_13.real");
    let o = run(&["report", file.to_str().unwrap(), "--emit-lnn", out.path().to_str().unwrap(), "--keep-best"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.path().join("3_17_13.lnn.real").exists());
    let reordered = fs::read_to_string(out.path().join("3_17_13.reordered.lnn.real")).unwrap();
    assert!(!reordered.contains("f2 "));
}

#[test]
fn verification_can_be_disabled() {
    let file = fixtures().join("hwb4_52.real");
    let o = run(&["report", file.to_str().unwrap(), "--verify-max-lines", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",skipped,"));
}

#[test]
fn parse_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.real"), ".numvars 1\n.variables a\n.begin\nt9 a\n.end\n").unwrap();
    let o = run(&["report", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.real"));
}

#[test]
fn empty_directory_prints_na() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["report", dir.path().to_str().unwrap(), "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n/a"));
}

#[test]
fn bad_arguments_exit_two() {
    let dir = fixtures();
    let d = dir.to_str().unwrap();
    for args in [
        vec!["report", d, "--order", "random"],
        vec!["report", d, "--seed", "x"],
        vec!["report", d, "--verify-max-lines", "64"],
        vec!["report", d, "--weighted-cut", "maybe"],
        vec!["report", d, "--format", "json"],
        vec!["report", "/no/such/path"],
        vec!["frobnicate"],
        vec![],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn exhaustive_rejects_wide_circuit() {
    let dir = tempfile::tempdir().unwrap();
    let names: Vec<String> = (0..9).map(|i| format!("v{i}")).collect();
    let text = format!(".numvars 9\n.variables {}\n.begin\nt2 v0 v8\n.end\n", names.join(" "));
    fs::write(dir.path().join("wide.real"), text).unwrap();
    let o = run(&["report", dir.path().to_str().unwrap(), "--order", "exhaustive"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn graph_dump() {
    let file = fixtures().join("3_17_13.real");
    let o = run(&["graph", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "# 0 a\n# 1 b\n# 2 c\n0: 1:3 2:3\n1: 0:3 2:1\n2: 0:3 1:1\n");
}

#[test]
fn help_succeeds() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["report", "--help"]).status.code(), Some(0));
}
