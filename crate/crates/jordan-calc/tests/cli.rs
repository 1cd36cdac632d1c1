use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_jordan-calc")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn hopf_json_is_reproducible() {
    let (code, a) = run(&["verify", "hopf", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["suite"], "hopf");
    assert_eq!(v["params"]["z"], "sym");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert_eq!(run(&["verify", "hopf", "--format", "json"]).1, a);
}

#[test]
fn qlie_for_one_family_at_a_rational_point() {
    let (code, md) = run(&["verify", "qlie", "--family", "3D", "--z", "1/2"]);
    assert_eq!(code, 0, "{md}");
    assert!(md.contains("z = 1/2, family = 3D"));
    assert!(md.trim_end().ends_with("0 failed"));
}

#[test]
fn reps_exits_one_on_the_killing_entry() {
    let (code, md) = run(&["verify", "reps"]);
    assert_eq!(code, 1);
    let failed: Vec<_> = md.lines().filter(|l| l.contains("| fail |")).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].contains("κ(Y_h,H_h)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "everything"]).0, 2);
    assert_eq!(run(&["verify", "calculus", "--family", "5"]).0, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_jordan-calc"))
        .args(["verify", "hopf"])
        .env("JORDAN_CALC_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_is_json() {
    let (code, s) = run(&["export"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v[0]["name"], "j=1/2 X");
}
