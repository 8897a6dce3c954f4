use std::process::{Command, Output};

fn algint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algint")).args(args).env_remove("ALGINT_OUT_DIR").output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn plane_census_to_stdout() {
    let o = algint(&["count-rect", "--n", "2", "--q", "2", "--naive"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1), Some("2,2,,,,,28,14,7,naive,"));
}

#[test]
fn json_format() {
    let o = algint(&["count-rect", "--n", "2", "--q", "2", "--naive", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json");
    assert_eq!(v["reports"][0]["count"], 28);
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_algint"))
        .args(["count-rect", "--n", "2", "--q", "2", "--naive"])
        .env("ALGINT_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("rect-count.csv")).unwrap();
    assert!(text.contains(",28,14,7,"));
}

#[test]
fn run_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"mode": "rect-count", "n": 2, "q": [2], "naive": true, "format": "json"}"#).unwrap();
    let out = dir.path().join("o.json");
    let o = algint(&["run", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let again: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(again["reports"][0]["count"], 28);
}

#[test]
fn exit_codes() {
    let bad_gamma = algint(&["count-curve", "--n", "3", "--q", "10", "--gamma", "7", "--interval", "1,2"]);
    assert_eq!(bad_gamma.status.code(), Some(2));
    let budget = algint(&["count-rect", "--n", "3", "--q", "10", "--naive", "--budget", "100"]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("budget"));
    let degenerate = algint(&["construct", "--n", "3", "--q", "1000", "--midpoint", "3/2,3/2"]);
    assert_eq!(degenerate.status.code(), Some(4));
}
