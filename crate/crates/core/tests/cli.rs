//! End-to-end tests driving the compiled binary.

use std::io::Write;
use std::process::{Command, Output};

use bitmce::cli::parse_bench_runs;
use bitmce::enumerate::RunStats;

fn bitmce(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bitmce"));
    cmd.args(args);
    cmd
}

fn run(args: &[&str]) -> Output {
    bitmce(args).output().expect("spawn bitmce")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout utf-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr utf-8")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout:\n{}\nstderr:\n{}",
        stdout_of(out),
        stderr_of(out)
    );
}

#[test]
fn help_and_version_exit_zero() {
    assert_exit(&run(&["--help"]), 0);
    assert_exit(&run(&["--version"]), 0);
    assert_exit(&run(&["run", "--help"]), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_exit(&run(&["run", "--no-such-flag"]), 1);
    assert_exit(
        &run(&["run", "--random", "10", "0.5", "--algorithm", "bogus"]),
        1,
    );
    assert_exit(&run(&["run"]), 1);
    assert_exit(&run(&["run", "--random", "10", "2.0"]), 1);
    assert_exit(
        &run(&["run", "--random", "10", "0.5", "--time-limit", "0"]),
        1,
    );
    assert_exit(&run(&["run", "--random", "10", "0.5", "--sink", "file"]), 1);
    assert_exit(&run(&["run", "--input", "/no/such/file.col"]), 1);
}

#[test]
fn verify_agrees_on_small_random() {
    let out = run(&["verify", "--random", "15", "0.5", "--seed", "7"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("AGREE"), "missing verdict:\n{text}");
    assert!(text.contains("oracle"), "oracle line missing:\n{text}");
    for name in [
        "bk-plain",
        "tomita",
        "naude",
        "bk-ordering",
        "greedybb",
        "greedybbtx",
        "greedybbnx",
        "tomitabb",
    ] {
        assert!(text.contains(name), "strategy {name} missing:\n{text}");
    }
}

#[test]
fn gen_round_trips_through_run() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    let gen = run(&[
        "gen",
        "--random",
        "40",
        "0.4",
        "--seed",
        "9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_exit(&gen, 0);

    let from_file = run(&[
        "run",
        "--input",
        path.to_str().unwrap(),
        "--algorithm",
        "tomita",
        "--stats",
        "json",
    ]);
    assert_exit(&from_file, 0);
    let from_random = run(&[
        "run",
        "--random",
        "40",
        "0.4",
        "--seed",
        "9",
        "--algorithm",
        "tomita",
        "--stats",
        "json",
    ]);
    assert_exit(&from_random, 0);

    let a: RunStats = serde_json::from_str(&stdout_of(&from_file)).unwrap();
    let b: RunStats = serde_json::from_str(&stdout_of(&from_random)).unwrap();
    assert_eq!(a.cliques, b.cliques);
    assert_eq!(a.steps, b.steps);
    assert_eq!(a.m, b.m);
}

#[test]
fn stream_sink_reports_dimacs_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path4.col");
    std::fs::write(
        &path,
        "c path on four vertices\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n",
    )
    .unwrap();

    for algorithm in ["bk-plain", "greedybb", "tomitabb"] {
        let out = run(&[
            "run",
            "--input",
            path.to_str().unwrap(),
            "--algorithm",
            algorithm,
            "--sink",
            "stream",
        ]);
        assert_exit(&out, 0);
        let text = stdout_of(&out);
        let mut lines: Vec<&str> = text.lines().map(str::trim).collect();
        lines.retain(|l| !l.is_empty());
        lines.sort_unstable();
        assert_eq!(lines, vec!["1 2", "2 3", "3 4"], "algorithm {algorithm}");
    }
}

#[test]
fn file_sink_writes_cliques_to_path() {
    let dir = tempfile::tempdir().unwrap();
    let cliques = dir.path().join("cliques.txt");
    let out = run(&[
        "run",
        "--moon-moser",
        "2",
        "--sink",
        "file",
        "--cliques-out",
        cliques.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    let text = std::fs::read_to_string(&cliques).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 2));
}

#[test]
fn csv_stats_parse_back_into_run_stats() {
    let out = run(&[
        "run", "--random", "25", "0.5", "--seed", "3", "--stats", "csv",
    ]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.starts_with(RunStats::CSV_HEADER));
    let rows = bitmce::enumerate::read_stats_csv(text.as_bytes()).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].strategy, "greedybb");
    assert_eq!(rows[0].source, "random(n=25,p=0.5,seed=3)");
    assert_eq!(rows[0].n, 25);
    assert!(!rows[0].partial);
}

#[test]
fn run_verify_flag_cross_checks_oracle() {
    let out = run(&[
        "run",
        "--random",
        "18",
        "0.6",
        "--algorithm",
        "greedybbnx",
        "--verify",
    ]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).contains("verify: AGREE"));

    let skipped = run(&["run", "--random", "30", "0.2", "--verify"]);
    assert_exit(&skipped, 0);
    assert!(stderr_of(&skipped).contains("skipped"));
}

#[test]
fn time_limit_exits_three_and_flags_partial() {
    let out = run(&[
        "run",
        "--random",
        "60",
        "0.9",
        "--time-limit",
        "0.000001",
        "--stats",
        "json",
    ]);
    assert_exit(&out, 3);
    let stats: RunStats = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(stats.partial);
    assert!(stderr_of(&out).contains("time limit"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.col");
    std::fs::write(&path, "p edge 3 1\ne 1 9\n").unwrap();
    let out = run(&["run", "--input", path.to_str().unwrap()]);
    assert_exit(&out, 1);
    let err = stderr_of(&out);
    assert!(err.contains("line 2"), "stderr:\n{err}");
}

#[test]
fn edge_list_input_with_one_based_ids() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.edges");
    std::fs::write(&path, "# triangle\n1 2\n2 3\n1 3\n").unwrap();
    let out = run(&[
        "run",
        "--input",
        path.to_str().unwrap(),
        "--edge-base",
        "one",
        "--sink",
        "stream",
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).trim(), "1 2 3");
}

#[test]
fn bench_is_deterministic_and_sectioned() {
    let args = [
        "bench", "--random", "25", "0.5", "--runs", "3", "--seed", "11", "--stats", "csv",
    ];
    let first = run(&args);
    assert_exit(&first, 0);
    let second = run(&args);
    assert_exit(&second, 0);

    let key = |text: &str| -> Vec<(String, String, u64, u64)> {
        parse_bench_runs(text)
            .unwrap()
            .into_iter()
            .map(|r| (r.strategy, r.source, r.cliques, r.steps))
            .collect()
    };
    let a = key(&stdout_of(&first));
    let b = key(&stdout_of(&second));
    assert_eq!(a.len(), 8 * 3);
    assert_eq!(a, b);

    let text = stdout_of(&first);
    let (_, means) = bitmce::cli::split_bench_csv(&text);
    assert!(
        means.starts_with("strategy,source,runs,mean_cliques"),
        "means:\n{means}"
    );
    assert_eq!(means.lines().count(), 1 + 8);
}

#[test]
fn bench_parallel_matches_serial_counts() {
    let base = [
        "bench",
        "--random",
        "20",
        "0.5",
        "--runs",
        "2",
        "--algorithm",
        "greedybb,tomitabb",
        "--stats",
        "csv",
    ];
    let serial = run(&base);
    assert_exit(&serial, 0);

    let mut cmd = bitmce(&base);
    cmd.arg("--jobs").arg("2");
    let flagged = cmd.output().unwrap();
    assert_exit(&flagged, 0);

    let mut cmd = bitmce(&base);
    cmd.env("BITMCE_JOBS", "2");
    let from_env = cmd.output().unwrap();
    assert_exit(&from_env, 0);

    let counts = |out: &Output| -> Vec<(String, u64, u64)> {
        parse_bench_runs(&stdout_of(out))
            .unwrap()
            .into_iter()
            .map(|r| (r.source, r.cliques, r.steps))
            .collect()
    };
    assert_eq!(counts(&serial), counts(&flagged));
    assert_eq!(counts(&serial), counts(&from_env));
}

#[test]
fn bench_time_limit_exits_three() {
    let out = run(&[
        "bench",
        "--random",
        "60",
        "0.9",
        "--runs",
        "1",
        "--algorithm",
        "bk-plain",
        "--time-limit",
        "0.000001",
        "--stats",
        "csv",
    ]);
    assert_exit(&out, 3);
    let rows = parse_bench_runs(&stdout_of(&out)).unwrap();
    assert!(rows.iter().any(|r| r.partial));
}

#[test]
fn gen_writes_dimacs_to_stdout() {
    let out = run(&["gen", "--moon-moser", "2"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("p edge 6 9"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn stats_out_writes_to_file_and_stream_stats_go_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let stats_path = dir.path().join("stats.csv");
    let out = run(&[
        "run",
        "--moon-moser",
        "3",
        "--stats",
        "csv",
        "--out",
        stats_path.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    assert!(stdout_of(&out).is_empty());
    let rows =
        bitmce::enumerate::read_stats_csv(std::fs::read_to_string(&stats_path).unwrap().as_bytes())
            .unwrap();
    assert_eq!(rows[0].cliques, 27);

    let streamed = run(&["run", "--moon-moser", "2", "--sink", "stream"]);
    assert_exit(&streamed, 0);
    assert_eq!(stdout_of(&streamed).lines().count(), 9);
    assert!(stderr_of(&streamed).contains("strategy=greedybb"));
}

#[test]
fn dimacs_via_stdin_is_not_supported_but_dash_errors_cleanly() {
    let mut cmd = bitmce(&["run", "--input", "-"]);
    cmd.stdin(std::process::Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"p edge 2 1\ne 1 2\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
