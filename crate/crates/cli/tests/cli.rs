use std::process::{Command, Output};

fn ulam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulam"))
        .args(args)
        .env_remove("ULAM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sequence_csv() {
    let out = ulam(&["sequence", "--class", "u", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,k,count\n4,1,1\n4,2,13\n4,3,9\n4,4,1\n");
}

#[test]
fn sequence_json_round_trips() {
    let out = ulam(&["sequence", "--class", "a", "--n", "6", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "a");
    assert_eq!(v["k_min"], 3);
    assert_eq!(v["counts"], serde_json::json!([5, 9, 5, 1]));
}

#[test]
fn sequence_is_deterministic_across_modes() {
    let par = ulam(&["sequence", "--class", "u", "--n", "8", "--format", "json"]);
    let seq = ulam(&["--sequential", "sequence", "--class", "u", "--n", "8", "--format", "json"]);
    assert_eq!(par.stdout, seq.stdout);
    let shapes = ulam(&["sequence", "--class", "u", "--n", "8", "--format", "json", "--method", "shapes"]);
    assert_eq!(par.stdout, shapes.stdout);
}

#[test]
fn protected_class_needs_parameters() {
    let ok = ulam(&["sequence", "--class", "p", "--lm", "2,4", "--n", "6"]);
    assert!(ok.status.success());
    assert_eq!(ulam(&["sequence", "--class", "p(2,4)", "--n", "6"]).stdout, ok.stdout);
    assert_eq!(ulam(&["sequence", "--class", "p", "--n", "6"]).status.code(), Some(2));
}

#[test]
fn conjecture_small() {
    let out = ulam(&["verify", "conjecture", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n = 1: holds\nn = 2: holds\nn = 3: holds\n");
    let out = ulam(&["verify", "conjecture", "--n-max", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[3], serde_json::json!({"class": "u", "n": 4, "holds": true, "witnesses": [], "range": [1, 4]}));
}

#[test]
fn injection_reports() {
    for args in [
        &["verify", "injection", "--kind", "hook", "--n", "6"][..],
        &["verify", "injection", "--kind", "flip", "--n", "7", "--k", "4"],
        &["verify", "injection", "--kind", "protected", "--lm", "2,4", "--n", "7"],
        &["verify", "injection", "--kind", "lift", "--n", "5"],
        &["verify", "injection", "--kind", "lift", "--via", "two-row", "--n", "6"],
    ] {
        let out = ulam(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(stdout(&out).contains("injective"));
    }
    let out = ulam(&["verify", "injection", "--kind", "flip", "--n", "7", "--k", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn formulas() {
    let out = ulam(&["verify", "formulas", "--n-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("values agree\n"));
}

#[test]
fn rsk_both_directions() {
    let out = ulam(&["rsk", "--perm", "3,1,4,2"]);
    assert_eq!(stdout(&out), "1,2/3,4;1,3/2,4\n");
    let out = ulam(&["rsk", "--inverse", "1,2/3,4;1,3/2,4"]);
    assert_eq!(stdout(&out), "3,1,4,2\n");
}

#[test]
fn inject_worked_examples() {
    let out = ulam(&["inject", "hook", "--t1", "1,2,5/3/4", "--t2", "1,2,3,4,5"]);
    assert_eq!(stdout(&out), "1,2,3,5/4 1,2,4,5/3\n");
    let out = ulam(&[
        "inject",
        "protected",
        "--t1",
        "1,3,6,9/2,4,7,15/5,8/10,13/11/12/14",
        "--t2",
        "1,2,3,4,11,14/5,6,8,12/7,10,13,15/9",
        "--lm",
        "4,12",
    ]);
    assert_eq!(
        stdout(&out),
        "1,3,6,9,12/2,4,7,15/5,8/10,13/11/14 1,2,3,4,14/5,6,8,12/7,10,13,15/9/11\n"
    );
    let out = ulam(&["inject", "hook", "--t1", "1,2/3,4", "--t2", "1,2,3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paths() {
    assert_eq!(stdout(&ulam(&["path", "--tableau", "1,3,4,5,6,7/2"])), "ENEEEEE\n");
    assert_eq!(
        stdout(&ulam(&["path", "flip", "--p", "EENENNE", "--q", "ENEEEEE"])),
        "EENENEE ENEEENE\n"
    );
    assert_eq!(ulam(&["path", "--tableau", "1,2/3/4"]).status.code(), Some(2));
}

#[test]
fn errors_name_the_offending_token() {
    let out = ulam(&["rsk", "--perm", "3,1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"x\""));
    assert_eq!(ulam(&["path", "flip", "--p", "EEX", "--q", "EEE"]).status.code(), Some(2));
    assert_eq!(ulam(&["bogus"]).status.code(), Some(2));
}

#[test]
fn budget_is_enforced_and_overridable() {
    let out = ulam(&["sequence", "--class", "u", "--n", "13"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ULAM_BUDGET"));
    let out = Command::new(env!("CARGO_BIN_EXE_ulam"))
        .args(["sequence", "--class", "h", "--n", "5"])
        .env("ULAM_BUDGET", "tab=4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_ulam"))
        .args(["sequence", "--class", "u", "--n", "3"])
        .env("ULAM_BUDGET", "perm=")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
