//! CLI contract tests: exit codes, deterministic output, JSON shapes,
//! guardrails, and the memo cache.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use mdl_core::canon::are_isomorphic;
use mdl_core::graph::{book, complete_graph};
use mdl_core::graph6::decode_graph6;

fn mdl() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mdl"))
}

fn run(args: &[&str]) -> Output {
    mdl().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn density_of_k4_is_three_halves() {
    let out = run(&["density", "--named", "complete:4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3/2\n");
}

#[test]
fn exact_output_never_decimal_by_default() {
    let out = run(&["density", "--named", "friendship:4"]);
    assert_eq!(stdout(&out), "4/3\n");
    let out = run(&["density", "--named", "friendship:4", "--decimal"]);
    let text = stdout(&out);
    assert!(text.starts_with("4/3"), "exact value leads: {text}");
    assert!(text.contains("1.333333"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["density"],                                        // no input source
        vec!["density", "--named", "nosuchfamily:3"],           // unknown family
        vec!["density", "--named", "path:3", "--graph6", "C~"], // two sources
        vec!["decode", "--graph6", "C"],                        // malformed graph6
        vec!["density", "--edges", "n=2; 0-0"],                 // self loop
        vec!["ears", "--named", "path:4"],                      // not biconnected
        vec!["mg", "density", "--mg", "bogus"],                 // bad multigraph
        vec![
            "fan",
            "--named",
            "complete:3",
            "--shared",
            "0,1,2",
            "-k",
            "2",
        ], // S not proper
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {:?}", out);
        assert!(!out.stderr.is_empty(), "error goes to stderr for {args:?}");
    }
    // clap-level usage error
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_failure_exits_1_and_pass_exits_0() {
    let out = run(&["verify", "blocks"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "verify",
        "low-spectrum",
        "--max-n",
        "5",
        "--drop-density",
        "5/4",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn byte_identical_outputs_across_runs() {
    for args in [
        vec!["spectrum", "--max-n", "6", "--format", "csv"],
        vec!["enumerate", "--max-n", "5"],
        vec![
            "check-minimal",
            "--named",
            "friendship:3",
            "--format",
            "json",
        ],
        vec!["blocks", "--named", "friendship:3", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(
            stdout(&a),
            stdout(&b),
            "nondeterministic output for {args:?}"
        );
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn check_minimal_json_shape() {
    let out = run(&[
        "check-minimal",
        "--named",
        "friendship:4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], serde_json::json!(true));
    assert_eq!(v["density"], serde_json::json!("4/3"));
    let best = &v["best_proper_minor"];
    assert!(best["graph6"].is_string());
    assert!(best["density"].is_string());
    assert!(best["witness"].is_array());
}

#[test]
fn spectrum_csv_columns_and_reparseable_witnesses() {
    let out = run(&[
        "spectrum", "--max-n", "5", "--cap", "3/2", "--format", "csv",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "density_num,density_den,witness_graph6,n,m"
    );
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 5);
        let g = decode_graph6(cols[2]).expect("witness graph6 parses");
        let n: usize = cols[3].parse().unwrap();
        let m: usize = cols[4].parse().unwrap();
        assert_eq!((g.n(), g.m()), (n, m));
        let num: i64 = cols[0].parse().unwrap();
        let den: i64 = cols[1].parse().unwrap();
        assert_eq!(g.density(), mdl_core::Rational::new(num, den));
    }
}

#[test]
fn stdin_graph6_input() {
    let mut child = mdl()
        .args(["decode", "--graph6", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"C~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n: 4  m: 6"));
}

#[test]
fn fan_command_builds_books() {
    let out = run(&[
        "fan",
        "--named",
        "complete:3",
        "--shared",
        "0,1",
        "-k",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], serde_json::json!(5));
    assert_eq!(v["m"], serde_json::json!(7));
    assert_eq!(v["density"], serde_json::json!("7/5"));
    let g = decode_graph6(v["graph6"].as_str().unwrap()).unwrap();
    assert!(are_isomorphic(&g, &book(3).unwrap()));
}

#[test]
fn minor_test_reports_witness_or_absence() {
    let out = run(&[
        "minor-test",
        "--named",
        "cycle:6",
        "--minor-named",
        "complete:3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["present"], serde_json::json!(true));
    assert_eq!(v["witness"].as_array().unwrap().len(), 3);

    let out = run(&[
        "minor-test",
        "--named",
        "cycle:4",
        "--minor-named",
        "complete:4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "absent\n");
}

#[test]
fn mg_commands() {
    let out = run(&["mg", "density", "--mg", "n=2; 0-1:3"]);
    assert!(stdout(&out).contains("density: 3/2"));
    assert!(stdout(&out).contains("rank: 2"));

    let out = run(&[
        "mg",
        "densest-minor",
        "--mg",
        "n=2; 0-1:3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["density"], serde_json::json!("2"));
    assert_eq!(v["minor"], serde_json::json!("n=1; loops 0:2"));

    let out = run(&["mg", "check-minimal", "--mg", "n=3; 0-1:1, 1-2:1"]);
    assert!(stdout(&out).contains("verdict: true"));

    let out = run(&[
        "mg",
        "family-density",
        "--mg",
        "n=3; 0-1:1, 1-2:1, 0-2:1",
        "--mg",
        "n=4; 0-1:1, 1-2:1, 2-3:1",
    ]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn next_density_above_one_at_max_n_8() {
    let out = run(&["next-density", "--above", "1", "--max-n", "8"]);
    assert_eq!(stdout(&out), "6/5\n");
}

#[test]
fn guardrail_respects_env_and_unsafe_flag() {
    // friendship:3 has 7 vertices; a guardrail of 4 must reject it
    let out = mdl()
        .args(["check-minimal", "--named", "friendship:3"])
        .env("MDL_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = mdl()
        .args(["check-minimal", "--named", "friendship:3", "--unsafe-large"])
        .env("MDL_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: true"));
}

#[test]
fn cache_round_trip_and_corruption_fallback() {
    let dir = std::env::temp_dir().join(format!("mdl-cache-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cache = dir.join("memo.tsv");
    let cache_str = cache.to_str().unwrap();

    let cold = run(&[
        "spectrum", "--max-n", "5", "--cap", "3/2", "--cache", cache_str,
    ]);
    assert_eq!(cold.status.code(), Some(0));
    assert!(cache.exists(), "cache file written");
    let first = std::fs::read_to_string(&cache).unwrap();
    assert!(first.lines().count() > 10);

    // warm run: identical output
    let warm = run(&[
        "spectrum", "--max-n", "5", "--cap", "3/2", "--cache", cache_str,
    ]);
    assert_eq!(stdout(&cold), stdout(&warm));

    // corrupted cache: warning on stderr, correct output anyway
    std::fs::write(&cache, "not a cache line\n").unwrap();
    let recovered = run(&[
        "spectrum", "--max-n", "5", "--cap", "3/2", "--cache", cache_str,
    ]);
    assert_eq!(stdout(&cold), stdout(&recovered));
    assert!(String::from_utf8_lossy(&recovered.stderr).contains("corrupt"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn encode_decode_round_trip_via_cli() {
    let out = run(&["encode", "--named", "complete:4"]);
    assert_eq!(stdout(&out), "C~\n");
    let out = run(&["decode", "--graph6", "A?"]);
    assert!(stdout(&out).contains("n: 2  m: 0"));
    let k4 = decode_graph6("C~").unwrap();
    assert!(are_isomorphic(&k4, &complete_graph(4).unwrap()));
}

#[test]
fn ears_output_lists_rank_many_ears() {
    let out = run(&["ears", "--named", "complete:4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ears"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_rank4_small_scales_pass() {
    let out = run(&["verify", "rank4", "--max-n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
}
