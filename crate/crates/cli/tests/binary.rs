use std::io::Write;
use std::process::{Command, Stdio};

fn certify(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_certify"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_to_stdout() {
    let (code, out, _) = certify(
        &["-", "--json", "-"],
        "ring R = F(101)[x,y] / (x^2, y^2); task certify(R, tor_persistent); task selmer(5);",
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let tasks = v["tasks"].as_array().unwrap();
    assert_eq!(tasks.len(), 2);
    for key in ["kind", "inputs", "result", "timing_ms"] {
        assert!(tasks[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(tasks[0]["certificate"]["verdict"], "certified");
    assert_eq!(tasks[1]["result"]["report"]["r"], serde_json::json!(["1", "-1", "1"]));
}

#[test]
fn text_report_and_flags() {
    let (code, out, _) = certify(
        &["-", "--max-i", "3", "--field", "Q", "--seed-fixtures", "--timing"],
        "task betti(DualNumbers);",
    );
    assert_eq!(code, 0);
    assert!(out.contains("Q[x]/(x^2)"), "{out}");
    assert!(out.contains("betti numbers 1, 1, 1, 1;"), "{out}");
    assert!(out.contains(" ms"));
}

#[test]
fn parse_errors_exit_with_diagnostics() {
    let (code, out, err) = certify(&["-"], "ring R = Q[x] / (x^2 - 1);\n");
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("-:1:"), "{err}");
    assert!(err.contains("not homogeneous"));
    let (code, _, err) = certify(&["/nonexistent/script.hc"], "");
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
}

#[test]
fn shipped_fixture_file_runs() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/denominators.hc");
    let (code, out, _) = certify(&[path], "");
    assert_eq!(code, 0);
    assert_eq!(out.matches("good: ").count(), 4);
}
