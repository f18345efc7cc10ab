use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dmkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dmkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn pass_exits_zero() {
    let out = dmkit(&["remark5.2", "--format", "json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["config"]["seed"], 20_000_601);
}

#[test]
fn failing_check_exits_one() {
    // one sample cannot reach the expected lower bound 2
    let out = dmkit(&["example5.1", "--samples", "1"], None);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: FAIL"));
}

#[test]
fn input_errors_exit_two() {
    let out = dmkit(&["analyze"], Some("ring R = semigroup(3,4);\ng = s^5;\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2:5"));
    assert_eq!(dmkit(&["example5.4", "--e", "9"], None).status.code(), Some(2));
    assert_eq!(dmkit(&["remark5.2", "--p", "91"], None).status.code(), Some(2));
    assert_eq!(dmkit(&["analyze", "/nonexistent/input.dm"], None).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_apart_from_timing() {
    let run = || {
        let mut v = json(&dmkit(&["example5.4", "--e", "4", "--variant", "g", "--format", "json"], None));
        v.as_object_mut().unwrap().remove("millis");
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn analyze_reads_stdin() {
    let out = dmkit(
        &["analyze", "--format", "json"],
        Some("ring R = semigroup(3,4);\ng = s^3 + s^4*t;\nf = s^6 - s^8*t;\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["k_min"], 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("dmkit-cli-{}.json", std::process::id()));
    let out = dmkit(&["footnote5.3", "--format", "json", "--out", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["results"]["mu"], 3);
}
