use std::path::{Path, PathBuf};
use std::process::Command;

use alliance_core::cli::run;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn alliance(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("alliance").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_graph(dir: &Path, name: &str, family: &str, n: &str) -> PathBuf {
    let generated = alliance(&["generate", family, n]);
    assert_eq!(generated.code, 0, "{}", generated.err);
    let path = dir.join(name);
    std::fs::write(&path, generated.out).unwrap();
    path
}

fn fixtures() -> (TempDir, PathBuf, PathBuf, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_graph(dir.path(), "c4.el", "cycle", "4");
    let c6 = write_graph(dir.path(), "c6.el", "cycle", "6");
    let k4 = write_graph(dir.path(), "k4.el", "complete", "4");
    (dir, c4, c6, k4)
}

#[test]
fn check_monopoly_on_c4() {
    let (_dir, c4, _, _) = fixtures();
    let c4 = c4.to_str().unwrap();
    let text = alliance(&["check", "--graph", c4, "--set", "0,2", "--name", "monopoly"]);
    assert_eq!((text.code, text.out.as_str()), (0, "false\n"));
    let json = alliance(&[
        "check", "--graph", c4, "--set", "0,2", "--name", "monopoly", "--format", "json",
    ]);
    assert_eq!(json.out, "{\"result\":false}\n");
    let weak = alliance(&[
        "check",
        "--graph",
        c4,
        "--set",
        "0,2",
        "--name",
        "monopoly-paper",
    ]);
    assert_eq!(weak.out, "true\n");
}

#[test]
fn solve_powerful_on_c6() {
    let (_dir, _, c6, _) = fixtures();
    let args = [
        "solve",
        "--graph",
        c6.to_str().unwrap(),
        "--name",
        "powerful",
        "--param",
        "r=0",
        "--objective",
        "min",
        "--format",
        "json",
    ];
    let r = alliance(&args);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.out,
        "{\"feasible\":true,\"size\":4,\"witness\":[0,1,3,4]}\n"
    );
    for method in ["exhaustive", "bb"] {
        let mut with = args.to_vec();
        with.extend(["--method", method]);
        assert_eq!(alliance(&with).out, r.out);
    }
}

#[test]
fn raw_spec_on_k4() {
    let (_dir, _, _, k4) = fixtures();
    let r = alliance(&[
        "check",
        "--graph",
        k4.to_str().unwrap(),
        "--set",
        "0,1",
        "--D",
        "all",
        "--O",
        ">=1",
        "--global",
    ]);
    assert_eq!((r.code, r.out.as_str()), (0, "true\n"));
    let negative = alliance(&[
        "check",
        "--graph",
        k4.to_str().unwrap(),
        "--set",
        "0",
        "--D",
        "<=-1",
        "--O",
        "all",
    ]);
    assert_eq!(negative.out, "true\n");
}

#[test]
fn infeasible_solve_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write_graph(dir.path(), "k2.el", "complete", "2");
    let r = alliance(&[
        "solve",
        "--graph",
        k2.to_str().unwrap(),
        "--name",
        "defensive",
        "--param",
        "r=2",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 1);
    assert_eq!(
        r.out,
        "{\"feasible\":false,\"size\":null,\"witness\":null}\n"
    );
}

#[test]
fn usage_and_input_errors_exit_two() {
    let (dir, c4, _, _) = fixtures();
    let c4 = c4.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["check", "--graph", c4, "--set", "0,9", "--name", "monopoly"],
        vec![
            "check", "--graph", c4, "--set", "0", "--name", "monopoly", "--D", "all",
        ],
        vec!["check", "--graph", c4, "--set", "0"],
        vec![
            "check", "--graph", c4, "--set", "0", "--D", "banana", "--O", "all",
        ],
        vec!["check", "--graph", c4, "--set", "0", "--name", "powerful"],
        vec![
            "solve",
            "--graph",
            c4,
            "--name",
            "robust-majority",
            "--method",
            "bb",
        ],
        vec![
            "propagate",
            "--graph",
            c4,
            "--seeds",
            "0",
            "--rounds",
            "soon",
        ],
        vec!["verify", "--nmax", "9"],
    ];
    for args in cases {
        let r = alliance(&args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(!r.err.is_empty(), "{args:?}");
    }
    let bad = dir.path().join("bad.el");
    std::fs::write(&bad, "3 2\n0 1\n1 1\n").unwrap();
    let r = alliance(&[
        "check",
        "--graph",
        bad.to_str().unwrap(),
        "--set",
        "0",
        "--name",
        "monopoly",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("self-loop"));
    let missing = dir.path().join("missing.el");
    assert_eq!(
        alliance(&[
            "check",
            "--graph",
            missing.to_str().unwrap(),
            "--set",
            "0",
            "--name",
            "monopoly"
        ])
        .code,
        2
    );
}

#[test]
fn propagate_c4() {
    let (_dir, c4, _, _) = fixtures();
    let c4 = c4.to_str().unwrap();
    let r = alliance(&[
        "propagate",
        "--graph",
        c4,
        "--seeds",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(
        r.out,
        "{\"active\":[0,1,2,3],\"all_active\":true,\"rounds\":2}\n"
    );
    let one = alliance(&["propagate", "--graph", c4, "--seeds", "0", "--rounds", "1"]);
    assert_eq!(one.out, "active {0,1,3}\nrounds 1\nall_active false\n");
    let strict = alliance(&["propagate", "--graph", c4, "--seeds", "0", "--strict"]);
    assert_eq!(strict.out, "active {0}\nrounds 0\nall_active false\n");
    let thresholds = alliance(&[
        "propagate",
        "--graph",
        c4,
        "--seeds",
        "0",
        "--thresholds",
        "1:2,3:2",
    ]);
    assert_eq!(thresholds.out, "active {0}\nrounds 0\nall_active false\n");
}

#[test]
fn verify_reports_weak_monopoly_counterexample() {
    let r = alliance(&[
        "verify",
        "--nmax",
        "6",
        "--prop",
        "monopoly-paper",
        "--family",
        "cycles",
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 0, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let report = &v[0];
    assert_eq!(report["proposition_id"], "monopoly-paper");
    assert_eq!(report["family"], "cycles");
    let hit = report["counterexamples"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| {
            c["graph_edgelist"] == "4 4\n0 1\n0 3\n1 2\n2 3\n"
                && c["set"] == serde_json::json!([0, 2])
        });
    let hit = hit.expect("C4 counterexample");
    assert_eq!(
        (hit["direct"].as_bool(), hit["framework"].as_bool()),
        (Some(false), Some(true))
    );

    let text = alliance(&["verify", "--nmax", "3"]);
    assert_eq!(text.code, 0);
    assert!(text.out.contains("remark"));
    assert!(text.out.contains("erratum"));
    assert!(!text.out.contains("FAILED"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let (_dir, _, c6, _) = fixtures();
    let bin = env!("CARGO_BIN_EXE_alliance");
    let outputs: Vec<Vec<u8>> = ["1", "2", "1"]
        .iter()
        .map(|threads| {
            let o = Command::new(bin)
                .env("ALLIANCE_THREADS", threads)
                .args([
                    "solve",
                    "--graph",
                    c6.to_str().unwrap(),
                    "--name",
                    "signed-dominating",
                ])
                .args([
                    "--param",
                    "k=1",
                    "--method",
                    "exhaustive",
                    "--format",
                    "json",
                    "--stats",
                ])
                .output()
                .unwrap();
            assert!(o.status.success());
            let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
            serde_json::to_vec(&serde_json::json!([v["witness"], v["subsets_examined"]])).unwrap()
        })
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));

    let verify = || {
        Command::new(bin)
            .args(["verify", "--nmax", "3", "--format", "json"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(verify(), verify());
}

#[test]
fn bad_thread_count_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_alliance"))
        .env("ALLIANCE_THREADS", "zero")
        .args(["generate", "path", "3"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
