//! Exit codes and output of the `artin` binary for a fixed battery of
//! invocations.

use std::process::Command;

fn artin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_artin"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn golden_battery() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["eq", "--type", "A:3", "1 2 1", "2 1 2"], 0, "equal\n"),
        (&["eq", "--type", "A:3/Z", "1", "2"], 0, "not equal\n"),
        (&["eq", "--type", "B:3", "2 3 2 3", "3 2 3 2"], 0, "equal\n"),
        (&["eq", "--type", "AffA:3", "1 3 1", "3 1 3"], 0, "equal\n"),
        (&["eq", "--type", "AffC:4", "1 2", "2 1"], 0, "not equal\n"),
        (&["eq", "--type", "I2:5", "1 2 1 2 1", "2 1 2 1 2"], 0, "equal\n"),
        (&["eq", "--type", "A:3", "-1 1", ""], 0, "equal\n"),
        (&["verify", "--morphism", "embed_B_in_A", "--n", "3"], 0, "ok (3 relations checked)\n"),
        (&["verify", "--morphism", "T0_I2", "--n", "4"], 0, "ok (1 relations checked)\n"),
        (&["perm", "--type", "A:3", "1 2 3"], 0, "(1 4 3 2)\n"),
        (&["nf", "--type", "A:3", "1 2 1 3 2 1"], 0, "Δ^1\n"),
        (&["nf", "--type", "A:3", "-1"], 0, "Δ^-1 [1 2 1 3 2]\n"),
        (&["len", "--type", "A:4", "1 -2 3 3"], 0, "2\n"),
        (&["len", "--type", "B:3", "1 3 -2 3"], 0, "2\nabelianized: (0, 2)\n"),
        (&["tv", "--comm-seq", "6", "3"], 0, "7\n43\n1807\n"),
        (
            &["tv", "--type", "B:3", "--p", "1", "--q", "-2"],
            0,
            "T(1, -2)[B:3]\nk = 1\nautomorphism: yes\nTv(B:3): Z generated by (1, -2)\n",
        ),
        (
            &["tv", "--type", "A:3", "--m", "1"],
            0,
            "T1[A:3]\nk = 13\nautomorphism: no\nTv(A:3): trivial\n",
        ),
    ];
    for (args, code, stdout) in cases {
        let (c, out, err) = artin(args);
        assert_eq!((c, out.as_str()), (*code, *stdout), "{args:?}: {err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eq", "--type", "X:3", "1", "2"][..],
        &["eq", "--type", "A:3", "1 q", "2"],
        &["eq", "--type", "A:3", "4", "1"],
        &["eq", "--type", "A:3", "1"],
        &["eq", "--type", "A:1", "1", "1"],
        &["verify", "--morphism", "no_such_map", "--n", "3"],
        &["verify", "--morphism", "eta_I2", "--n", "5"],
        &["tv", "--type", "AffA:4", "--m", "1"],
        &["tv", "--type", "B:3", "--p", "1"],
        &["tv", "--comm-seq", "2", "3"],
        &["report", "--ranks", "2"],
        &["report", "--format", "yaml"],
        &["bogus"],
        &[],
    ] {
        let (c, out, err) = artin(args);
        assert_eq!(c, 2, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?} printed no message");
    }
}

#[test]
fn computational_failures_exit_one() {
    let (c, _, err) = artin(&["eq", "--type", "F4", "1", "2"]);
    assert_eq!(c, 1);
    assert!(err.contains("unsupported"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(artin(&["--help"]).0, 0);
    assert_eq!(artin(&["--version"]).0, 0);
}

#[test]
fn report_to_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("artin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (c, out, _) = artin(&["report", "--ranks", "3", "--format", "json", "--seed", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(c, 0);
    assert!(out.starts_with("66 pass, 0 fail, 0 skipped"));
    let json = std::fs::read_to_string(&path).unwrap();
    let r = artin_core::harness::Report::from_json(&json).unwrap();
    assert_eq!(r.config.seed, 5);
    assert_eq!(r.checks.len(), 66);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    for key in ["version", "config", "checks", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    for key in ["id", "anchor", "params", "status", "ms"] {
        assert!(v["checks"][0].get(key).is_some(), "{key}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_report_lines() {
    let (c, out, _) = artin(&["report", "--ranks", "3"]);
    assert_eq!(c, 0);
    let lines: Vec<&str> = out.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(lines.len(), 66);
    assert!(lines.iter().all(|l| l.starts_with("[PASS] ") && l.ends_with(')')));
}

#[test]
fn tiny_budget_skips() {
    let (c, out, _) = artin(&["report", "--ranks", "3", "--letter-budget", "10"]);
    assert_eq!(c, 0);
    assert!(out.contains("[SKIP] oracle/agreement/A:3"));
    assert!(!out.contains("[FAIL]"));
}
