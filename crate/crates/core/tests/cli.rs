use std::process::{Command, Output};

fn togliatti(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_togliatti"))
        .args(args)
        .env_remove("TOGLIATTI_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_classical_cubic_surface() {
    let o = togliatti(&["analyze", "x0^3,x1^3,x2^3,x0*x1*x2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["togliatti"]["is_togliatti"], true);
    assert_eq!(v["tags"]["minimal"], true);
    assert_eq!(v["smoothness"]["is_smooth"], true);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn analyze_reports_slopes_as_fractions() {
    let o = togliatti(&["analyze", "x0^5,x1^5,x2^5,x0^4*x1", "--checks", "stability"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["stability"]["slope_of_e"], serde_json::json!({"num": -20, "den": 3}));
    assert_eq!(v["stability"]["verdict"], "unstable");
    assert!(v["wlp"].is_null());
}

#[test]
fn analyze_file_input_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.json");
    std::fs::write(&path, r#"{"n": 2, "d": 3, "generators": [[3,0,0],[0,3,0],[0,0,3],[1,1,1]]}"#).unwrap();
    let p = path.to_str().unwrap();
    let text = togliatti(&["analyze", p, "--format", "text"]);
    assert!(stdout(&text).contains("minimal     true"));
    let csv = togliatti(&["analyze", p, "--format", "csv"]);
    assert_eq!(stdout(&csv).lines().count(), 2);
    let svg = dir.path().join("p.svg");
    let o = togliatti(&["analyze", p, "--svg", svg.to_str().unwrap(), "--out", dir.path().join("r.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(svg).unwrap().starts_with("<svg"));
}

#[test]
fn input_errors_exit_2() {
    let o = togliatti(&["analyze", "x0^3,x1^3,x0*x1*x2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not artinian"));
    let o = togliatti(&["analyze", "x0^3,x1^3,x2^3,x0*x1**x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("column"));
}

#[test]
fn enumerate_quintic_orbits() {
    let o = togliatti(&["enumerate", "--n", "2", "--d", "5", "--mu", "6", "--filter", "minimal,smooth,nontrivial"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4, "{}", stdout(&o));
    let o = togliatti(&["enumerate", "--n", "2", "--d", "6", "--mu", "6", "--filter", "minimal,smooth,nontrivial"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn enumerate_is_identical_across_worker_counts() {
    let args = ["enumerate", "--n", "2", "--d", "6", "--mu", "6", "--filter", "togliatti", "--format", "json"];
    let one = togliatti(&[&args[..], &["--threads", "1"]].concat());
    let four = togliatti(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert!(!one.stdout.is_empty());
}

#[test]
fn budget_refusal_exits_3() {
    let o = togliatti(&["enumerate", "--n", "3", "--d", "5", "--mu", "11"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("133784560"));
}

#[test]
fn unknown_target_exits_4() {
    let o = togliatti(&["reproduce", "no-such-target"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stability-thm"));
}

#[test]
fn reproduce_uses_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_togliatti"))
            .args(["reproduce", "certificate-f3", "--format", "json"])
            .env("TOGLIATTI_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let lines = std::fs::read_to_string(dir.path().join("cache.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 1);
}

#[test]
fn failing_target_exits_nonzero() {
    let o = togliatti(&["reproduce", "thm-3-next-n2d7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL thm-3-next-n2d7"));
}

#[test]
fn survey_rows() {
    let o = togliatti(&["survey", "--n", "2", "--d", "4", "--mu", "5..6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().nth(1).unwrap().starts_with("2,4,5,"));
}
