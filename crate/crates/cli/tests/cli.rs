use std::process::{Command, Output};

fn uqdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqdyn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn trivial_algebra_run() {
    let o = uqdyn(&["verify", "--suite", "algebra", "--max-dim", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("pass 11 fail 0\n"));
}

#[test]
fn coboundary_json() {
    let o = uqdyn(&["verify", "--suite", "coboundary", "--max-dim", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 18);
    assert!(results.iter().all(|r| r["verdict"] == "exact"));
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn usage_errors() {
    let o = uqdyn(&["verify", "--suite", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("unknown suite") && err.contains("Usage"));
    assert_eq!(uqdyn(&["verify", "--max-dim", "-1"]).status.code(), Some(2));
    assert_eq!(uqdyn(&["verify", "--expand-order", "0"]).status.code(), Some(2));
    assert_eq!(uqdyn(&["verify", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(uqdyn(&["eval", "nosuch", "1"]).status.code(), Some(2));
    assert_eq!(uqdyn(&["eval", "B", "1,1"]).status.code(), Some(2));
}

#[test]
fn verification_failure_exit() {
    let o = uqdyn(&["verify", "--suite", "printed", "--max-dim", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(" fail at ("));
}

#[test]
fn eval_output() {
    let o = uqdyn(&["eval", "B", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "B on V_1 (dim 2)\n[0,0] t^2*y^2 / 1\n[1,1] t^2*y^-2 / 1\n");
    let rhat = stdout(&uqdyn(&["eval", "rhat", "1,1"]));
    assert_eq!(rhat.lines().filter(|l| l.starts_with('[')).count(), 5);
    assert!(rhat.contains("[1,2] t^4 - t^-4 / 1"));
    let f = stdout(&uqdyn(&["eval", "F_series", "0,3"]));
    assert_eq!(f, "F_series on V_0 ⊗ V_3 (dim 4)\n[0,0] 1 / 1\n[1,1] 1 / 1\n[2,2] 1 / 1\n[3,3] 1 / 1\n");
    assert_eq!(stdout(&uqdyn(&["eval", "N_minus", "2", "--trunc", "3"])), stdout(&uqdyn(&["eval", "N_minus", "2", "--trunc", "3"])));
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = path.display().to_string();
    let run = |jobs: &str| {
        let args = ["verify", "--suite", "twist,lemma,hyper", "--max-dim", "2", "--format", "json", "--out", &out, "--jobs", jobs];
        assert_eq!(uqdyn(&args).status.code(), Some(0));
        std::fs::read(&path).unwrap()
    };
    let first = run("1");
    let second = run("3");
    assert!(first == second, "reports differ between runs");
}
