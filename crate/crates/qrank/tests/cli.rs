//! Command-line behavior: exit codes, report formats, environment override,
//! and the series printer.

use std::process::Command;

fn qrank() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qrank"))
}

#[test]
fn list_names_every_check_and_series() {
    let out = qrank().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["rankid3", "zr52dis_a", "detd_expansion", "ram_full", "r_zeta5"] {
        assert!(text.contains(name), "list output missing {name}");
    }
}

#[test]
fn verify_single_check_json() {
    let out = qrank()
        .args(["verify", "--check", "detd_expansion", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["name"], "detd_expansion");
    assert_eq!(v[0]["status"], "PASS");
    assert_eq!(v[0]["order_checked"], 11);
    assert!(v[0]["first_mismatch"].is_null());
    assert!(v[0]["statement"].as_str().unwrap().contains("detD"));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("qrank-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qrank()
        .args(["verify", "--check", "jsimp", "--order", "20", "--format", "json"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[0]["status"], "PASS");
    assert_eq!(v[0]["order_checked"], 20);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn unregistered_check_is_a_usage_error() {
    let out = qrank().args(["verify", "--check", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unregistered"));
}

#[test]
fn bad_flag_is_a_usage_error() {
    let out = qrank().args(["verify", "--frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_sets_default_order() {
    let out = qrank()
        .args(["verify", "--check", "jsimp", "--format", "json"])
        .env("QRANK_DEFAULT_ORDER", "24")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["order_checked"], 24);
}

#[test]
fn series_prints_exact_coefficients() {
    let out = qrank().args(["series", "--name", "e", "--order", "12"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "0\t1");
    assert_eq!(lines[1], "1\t-1");
    assert_eq!(lines[5], "5\t1");
    assert_eq!(lines[12], "12\t-1");

    let out = qrank().args(["series", "--name", "nope", "--order", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dyson_cli_mod11() {
    let out = qrank().args(["dyson", "--mod", "11", "--max", "40"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("smallest failing case is 6"));

    // a range below the first case is a usage error
    let out = qrank().args(["dyson", "--mod", "11", "--max", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_order_rejected() {
    let out = qrank().args(["verify", "--check", "jsimp", "--order", "-3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dyson_cli_mod5_small() {
    let out = qrank().args(["dyson", "--mod", "5", "--max", "54"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("equal classes"));
    // p(4) = 5: the first case splits 1/1/1/1/1
    assert!(text.lines().next().unwrap().contains("p(n) ="));
}

#[test]
fn dyson_rejects_other_moduli() {
    let out = qrank().args(["dyson", "--mod", "13"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn closed_pipe_does_not_panic() {
    use std::io::Read;
    use std::process::Stdio;
    // read two lines and drop the pipe; the process must exit cleanly
    let mut child = qrank()
        .args(["series", "--name", "partitions", "--order", "200"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut buf = [0u8; 8];
    child.stdout.as_mut().unwrap().read_exact(&mut buf).unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    assert!(status.success(), "broken pipe must not crash the printer");
    let mut err = String::new();
    child.stderr.as_mut().unwrap().read_to_string(&mut err).unwrap();
    assert!(!err.contains("panicked"), "stderr shows a panic: {err}");
}
