use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinweights"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn core_prints_core_and_weight() {
    let out = run(&["core", "--parts", "5,4,1", "--p", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "core=(1) w=3");
    let out = run(&["core", "--parts", "1", "--p", "5"]);
    assert_eq!(stdout(&out).trim(), "core=(1) w=0");
}

#[test]
fn non_strict_parts_are_rejected() {
    let out = run(&["core", "--parts", "5,5", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn sign_table() {
    for (parts, p, eta, want) in [
        ("4", "3", "+1", "N=-2 mu=+1"),
        ("1", "3", "+1", "N=1 mu=+1"),
        ("3", "5", "+1", "N=-3 mu=-1"),
    ] {
        let out = run(&["sign", "--parts", parts, "--p", p, "--eta", eta]);
        assert_eq!(out.status.code(), Some(0), "{parts} {p} {eta}");
        assert_eq!(stdout(&out).trim(), want, "{parts} {p} {eta}");
    }
}

#[test]
fn verify_small_sweep_passes() {
    let out = run(&["verify", "--n", "4", "--p", "3", "--eta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("B[(1)] n=4 p=3 eta=+1 w=1 ibr=2 weights=2 PASS"),
        "{text}"
    );
    assert!(text.trim_end().ends_with("verdict=PASS"));
}

#[test]
fn verify_single_block() {
    let out = run(&[
        "verify", "--n", "7", "--p", "5", "--eta", "-1", "--block", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict=PASS"));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = run(&[
        "verify",
        "--n",
        "15",
        "--p",
        "3",
        "--eta",
        "-1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "PASS");
    assert!(!doc["blocks"].as_array().unwrap().is_empty());
}

#[test]
fn no_subcommand_is_a_usage_error() {
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn even_prime_is_an_error() {
    let out = run(&["verify", "--n", "4", "--p", "2", "--eta", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let out = run(&[
            "verify",
            "--n",
            "12",
            "--p",
            "5",
            "--eta",
            "-1",
            "--jobs",
            jobs,
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);

    let doc: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(doc["schema"], "spin-weights/verify/1");
    assert_eq!(doc["params"]["n"], 12);
    assert_eq!(doc["params"]["eta"], -1);
    assert_eq!(doc["verdict"], "PASS");
    assert!(doc.get("timing_ms").is_none());
    for block in doc["blocks"].as_array().unwrap() {
        let ibr = &block["ibr"];
        let weights = &block["weights"];
        assert_eq!(ibr["self"], weights["sym_plus"]);
        assert_eq!(ibr["nonself"], weights["sym_minus"]);
    }
}

#[test]
fn timing_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = run(&[
        "verify",
        "--n",
        "5",
        "--p",
        "3",
        "--eta",
        "1",
        "--timing",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert!(doc["timing_ms"].is_u64());
}

#[test]
fn reps_check_odd_and_even() {
    let out = run(&[
        "reps-check",
        "--p",
        "3",
        "--eta",
        "1",
        "--c",
        "1",
        "--e",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("mu'=-1") && text.trim_end().ends_with("PASS"),
        "{text}"
    );

    let out = run(&[
        "reps-check",
        "--p",
        "5",
        "--eta",
        "1",
        "--c",
        "1",
        "--e",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mu''=+1"));
}

#[test]
fn reps_check_size_guard() {
    let out = run(&[
        "reps-check",
        "--p",
        "3",
        "--eta",
        "1",
        "--c",
        "1",
        "--e",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
