//! Command-line front end: load or generate graphs, run one strategy or
//! the whole comparison matrix, verify against the oracle, emit stats.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 verification
//! mismatch, 3 time limit exceeded.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{
    read_stats_csv, run, write_stats_csv, CollectSink, CountSink, EnumerateError, RunConfig,
    RunStats, Strategy, StreamSink, TopOrdering,
};
use crate::graph::{BitGraph, IndexBase};
use crate::oracle;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_TIME_LIMIT: u8 = 3;

/// Environment variable supplying the default `bench --jobs` value.
pub const JOBS_ENV: &str = "BITMCE_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "bitmce",
    version,
    about = "Bit-parallel maximal clique enumeration",
    after_help = "Exit codes: 0 success, 1 usage/parse error, 2 verification mismatch, 3 time limit."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the maximal cliques of one graph with one strategy.
    Run(RunArgs),
    /// Run a strategy matrix and emit per-run rows plus per-group means.
    Bench(BenchArgs),
    /// Cross-check every strategy (and the oracle when n <= 25) on one graph.
    Verify(VerifyArgs),
    /// Generate a graph and write it as DIMACS.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Graph file (DIMACS or edge list).
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Random graph: vertex count and edge probability.
    #[arg(long, num_args = 2, value_names = ["N", "P"], conflicts_with = "input")]
    random: Option<Vec<String>>,

    /// Complete k-partite graph with parts of size 3 (3^k maximal cliques).
    #[arg(long, value_name = "K", conflicts_with_all = ["input", "random"])]
    moon_moser: Option<usize>,

    /// Seed for --random.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// How to interpret --input.
    #[arg(long, value_enum, default_value_t = FileFormat::Auto)]
    format: FileFormat,

    /// Vertex numbering base of an edge-list file.
    #[arg(long, value_enum, default_value_t = EdgeBase::Zero)]
    edge_base: EdgeBase,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Strategy name.
    #[arg(long, default_value = "greedybb")]
    algorithm: String,

    /// Top-level ordering for bk-ordering.
    #[arg(long, value_enum, default_value_t = TopOrderingArg::Degeneracy)]
    top_ordering: TopOrderingArg,

    /// What to do with the cliques themselves.
    #[arg(long, value_enum, default_value_t = SinkMode::Count)]
    sink: SinkMode,

    /// Clique destination for --sink file.
    #[arg(long, value_name = "PATH")]
    cliques_out: Option<PathBuf>,

    /// Stats rendering.
    #[arg(long, value_enum, default_value_t = StatsFormat::Human)]
    stats: StatsFormat,

    /// Stats destination (default: stdout; stderr when cliques stream to stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Abort enumeration after this many seconds.
    #[arg(long, value_name = "SECONDS")]
    time_limit: Option<f64>,

    /// Cross-check the clique set against the oracle (n <= 25 only).
    #[arg(long)]
    verify: bool,

    /// Assert the Bron-Kerbosch invariant at every node (slow).
    #[arg(long)]
    check_invariants: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Graph file; repeat for several graphs.
    #[arg(long, value_name = "PATH")]
    input: Vec<PathBuf>,

    /// Random graph family: vertex count and edge probability.
    #[arg(long, num_args = 2, value_names = ["N", "P"], conflicts_with = "input")]
    random: Option<Vec<String>>,

    /// Complete k-partite graph with parts of size 3.
    #[arg(long, value_name = "K", conflicts_with_all = ["input", "random"])]
    moon_moser: Option<usize>,

    /// Number of seeds for --random (seed, seed+1, ...).
    #[arg(long, default_value_t = 10)]
    runs: usize,

    /// First seed for --random.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// How to interpret --input files.
    #[arg(long, value_enum, default_value_t = FileFormat::Auto)]
    format: FileFormat,

    /// Vertex numbering base of edge-list files.
    #[arg(long, value_enum, default_value_t = EdgeBase::Zero)]
    edge_base: EdgeBase,

    /// Comma-separated strategy names, or "all".
    #[arg(long, default_value = "all", value_delimiter = ',')]
    algorithm: Vec<String>,

    /// Worker threads (default: $BITMCE_JOBS, else 1).
    #[arg(long)]
    jobs: Option<usize>,

    /// Stats rendering.
    #[arg(long, value_enum, default_value_t = StatsFormat::Csv)]
    stats: StatsFormat,

    /// Stats destination (default: stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Abort any single enumeration after this many seconds.
    #[arg(long, value_name = "SECONDS")]
    time_limit: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Random graph: vertex count and edge probability.
    #[arg(long, num_args = 2, value_names = ["N", "P"])]
    random: Option<Vec<String>>,

    /// Complete k-partite graph with parts of size 3.
    #[arg(long, value_name = "K", conflicts_with = "random")]
    moon_moser: Option<usize>,

    /// Seed for --random.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Output file (default: stdout).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    /// Sniff: lines opening with `c` or `p` mean DIMACS, else edge list.
    Auto,
    Dimacs,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EdgeBase {
    Zero,
    One,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SinkMode {
    /// Count cliques without materializing them.
    Count,
    /// Write one clique per line to stdout.
    Stream,
    /// Write one clique per line to --cliques-out.
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StatsFormat {
    Human,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TopOrderingArg {
    Degeneracy,
    MaxDegree,
    Identity,
}

impl From<TopOrderingArg> for TopOrdering {
    fn from(arg: TopOrderingArg) -> Self {
        match arg {
            TopOrderingArg::Degeneracy => TopOrdering::Degeneracy,
            TopOrderingArg::MaxDegree => TopOrdering::MaxDegreeFirst,
            TopOrderingArg::Identity => TopOrdering::Identity,
        }
    }
}

/// Run a parsed command line to completion and return the process exit code.
pub fn execute(cli: Cli) -> u8 {
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

/// Where a graph came from; knows how to realize itself and describe
/// itself in stats rows.
#[derive(Clone, Debug)]
enum GraphSource {
    File {
        path: PathBuf,
        format: FileFormat,
        base: EdgeBase,
    },
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    MoonMoser {
        k: usize,
    },
}

impl GraphSource {
    fn label(&self) -> String {
        match self {
            GraphSource::File { path, .. } => path.display().to_string(),
            GraphSource::Random { n, p, seed } => format!("random(n={n},p={p},seed={seed})"),
            GraphSource::MoonMoser { k } => format!("moon-moser(k={k})"),
        }
    }

    /// Label with per-seed detail removed; bench means group by this.
    fn group_label(&self) -> String {
        match self {
            GraphSource::Random { n, p, .. } => format!("random(n={n},p={p})"),
            other => other.label(),
        }
    }

    fn load(&self) -> Result<BitGraph, String> {
        match self {
            GraphSource::File { path, format, base } => {
                let mut text = String::new();
                File::open(path)
                    .and_then(|mut f| f.read_to_string(&mut text))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                let format = match format {
                    FileFormat::Auto => sniff_format(&text),
                    other => *other,
                };
                let parsed = match format {
                    FileFormat::Dimacs => BitGraph::from_dimacs_str(&text),
                    FileFormat::Edges => {
                        let base = match base {
                            EdgeBase::Zero => IndexBase::Zero,
                            EdgeBase::One => IndexBase::One,
                        };
                        BitGraph::from_edge_list(text.as_bytes(), base)
                    }
                    FileFormat::Auto => unreachable!("sniffed"),
                };
                parsed.map_err(|e| format!("{}: {e}", path.display()))
            }
            GraphSource::Random { n, p, seed } => Ok(BitGraph::random(*n, *p, *seed)),
            GraphSource::MoonMoser { k } => Ok(BitGraph::moon_moser(*k)),
        }
    }
}

fn sniff_format(text: &str) -> FileFormat {
    for line in text.lines() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        return match trimmed.split_whitespace().next() {
            Some("c") | Some("p") | Some("e") => FileFormat::Dimacs,
            _ => FileFormat::Edges,
        };
    }
    FileFormat::Edges
}

fn parse_random_spec(values: &[String]) -> Result<(usize, f64), String> {
    let n: usize = values[0]
        .parse()
        .map_err(|_| format!("--random N must be a positive integer, got {:?}", values[0]))?;
    if n == 0 {
        return Err("--random N must be at least 1".into());
    }
    let p: f64 = values[1]
        .parse()
        .map_err(|_| format!("--random P must be a number, got {:?}", values[1]))?;
    if !(0.0..=1.0).contains(&p) || !p.is_finite() {
        return Err(format!("--random P must lie in [0, 1], got {p}"));
    }
    Ok((n, p))
}

fn resolve_input(args: &InputArgs) -> Result<GraphSource, String> {
    if let Some(path) = &args.input {
        return Ok(GraphSource::File {
            path: path.clone(),
            format: args.format,
            base: args.edge_base,
        });
    }
    if let Some(values) = &args.random {
        let (n, p) = parse_random_spec(values)?;
        return Ok(GraphSource::Random {
            n,
            p,
            seed: args.seed,
        });
    }
    if let Some(k) = args.moon_moser {
        if k == 0 {
            return Err("--moon-moser K must be at least 1".into());
        }
        return Ok(GraphSource::MoonMoser { k });
    }
    Err("no input: pass --input, --random, or --moon-moser".into())
}

fn parse_time_limit(secs: Option<f64>) -> Result<Option<Duration>, String> {
    match secs {
        None => Ok(None),
        Some(s) if s > 0.0 && s.is_finite() => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => Err(format!("--time-limit must be positive, got {s}")),
    }
}

fn parse_strategy(name: &str, top: TopOrderingArg) -> Result<Strategy, String> {
    let strategy: Strategy = name.parse()?;
    Ok(match strategy {
        Strategy::BkOrdering(_) => Strategy::BkOrdering(top.into()),
        other => other,
    })
}

/// Stats sink: a file when `--out` was given, otherwise the fallback.
enum StatsOut {
    File(BufWriter<File>),
    Stdout,
    Stderr,
}

impl StatsOut {
    fn open(out: &Option<PathBuf>, fallback_stderr: bool) -> Result<Self, String> {
        match out {
            Some(path) => File::create(path)
                .map(|f| StatsOut::File(BufWriter::new(f)))
                .map_err(|e| format!("{}: {e}", path.display())),
            None if fallback_stderr => Ok(StatsOut::Stderr),
            None => Ok(StatsOut::Stdout),
        }
    }

    fn write_all_text(&mut self, text: &str) -> Result<(), String> {
        let outcome = match self {
            StatsOut::File(f) => f.write_all(text.as_bytes()).and_then(|()| f.flush()),
            StatsOut::Stdout => io::stdout().write_all(text.as_bytes()),
            StatsOut::Stderr => io::stderr().write_all(text.as_bytes()),
        };
        outcome.map_err(|e| format!("writing stats: {e}"))
    }
}

fn render_stats_rows(rows: &[RunStats], format: StatsFormat) -> String {
    match format {
        StatsFormat::Human => {
            let mut text = String::new();
            for row in rows {
                text.push_str(&row.human());
                text.push('\n');
            }
            text
        }
        StatsFormat::Csv => {
            let mut buf = Vec::new();
            write_stats_csv(rows, &mut buf).expect("csv to memory");
            String::from_utf8(buf).expect("csv is utf-8")
        }
        StatsFormat::Json => {
            let mut text = String::new();
            for row in rows {
                text.push_str(&row.to_json());
                text.push('\n');
            }
            text
        }
    }
}

fn cmd_run(args: RunArgs) -> Result<u8, String> {
    let strategy = parse_strategy(&args.algorithm, args.top_ordering)?;
    let source = resolve_input(&args.input)?;
    let time_limit = parse_time_limit(args.time_limit)?;
    let graph = source.load()?;

    let mut cfg = RunConfig::new(strategy).with_source(source.label());
    cfg.time_limit = time_limit;
    cfg.check_invariants = args.check_invariants;

    let (outcome, stream_used_stdout) = match args.sink {
        SinkMode::Count => (run(&graph, &cfg, &mut CountSink), false),
        SinkMode::Stream => {
            let stdout = io::stdout();
            let mut sink = StreamSink::new(BufWriter::new(stdout.lock()));
            let outcome = run(&graph, &cfg, &mut sink);
            sink.into_inner()
                .flush()
                .map_err(|e| format!("flushing cliques: {e}"))?;
            (outcome, true)
        }
        SinkMode::File => {
            let path = args
                .cliques_out
                .as_ref()
                .ok_or("--sink file requires --cliques-out")?;
            let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut sink = StreamSink::new(BufWriter::new(file));
            let outcome = run(&graph, &cfg, &mut sink);
            sink.into_inner()
                .flush()
                .map_err(|e| format!("flushing cliques: {e}"))?;
            (outcome, false)
        }
    };

    let mut stats_out = StatsOut::open(&args.out, stream_used_stdout)?;
    let (stats, code) = match outcome {
        Ok(stats) => (stats, EXIT_OK),
        Err(EnumerateError::TimeLimit(stats)) => {
            eprintln!("time limit exceeded; stats below are partial");
            (*stats, EXIT_TIME_LIMIT)
        }
        Err(EnumerateError::Sink(e)) => return Err(format!("writing cliques: {e}")),
    };
    stats_out.write_all_text(&render_stats_rows(std::slice::from_ref(&stats), args.stats))?;

    if code == EXIT_OK && args.verify {
        if graph.n() <= oracle::MAX_ORACLE_N {
            let mut collect = CollectSink::new();
            run(&graph, &RunConfig::new(strategy), &mut collect)
                .map_err(|e| format!("verification rerun failed: {e}"))?;
            let got = oracle::canonicalize(collect.cliques);
            let want = oracle::maximal_cliques(&graph).map_err(|e| e.to_string())?;
            if got == want {
                println!("verify: AGREE ({} cliques)", want.len());
            } else {
                println!(
                    "verify: MISMATCH (strategy found {}, oracle found {})",
                    got.len(),
                    want.len()
                );
                return Ok(EXIT_MISMATCH);
            }
        } else {
            eprintln!(
                "verify: skipped (n = {} exceeds oracle bound {})",
                graph.n(),
                oracle::MAX_ORACLE_N
            );
        }
    }
    Ok(code)
}

/// Mean of the numeric columns over one (group, strategy) cell.
#[derive(Debug, Clone, Serialize)]
struct MeanRow {
    strategy: String,
    source: String,
    runs: usize,
    mean_cliques: f64,
    mean_steps: f64,
    mean_max_clique: f64,
    mean_elapsed_seconds: f64,
    mean_prep_seconds: f64,
}

fn mean_rows(rows: &[RunStats], groups: &[String]) -> Vec<MeanRow> {
    let mut out: Vec<MeanRow> = Vec::new();
    let mut seen: Vec<(String, String)> = Vec::new();
    for (row, group) in rows.iter().zip(groups) {
        let key = (group.clone(), row.strategy.clone());
        if !seen.contains(&key) {
            seen.push(key);
        }
    }
    for (group, strategy) in seen {
        let cell: Vec<&RunStats> = rows
            .iter()
            .zip(groups)
            .filter(|(r, g)| r.strategy == strategy && **g == group)
            .map(|(r, _)| r)
            .collect();
        let k = cell.len() as f64;
        out.push(MeanRow {
            strategy,
            source: group,
            runs: cell.len(),
            mean_cliques: cell.iter().map(|r| r.cliques as f64).sum::<f64>() / k,
            mean_steps: cell.iter().map(|r| r.steps as f64).sum::<f64>() / k,
            mean_max_clique: cell.iter().map(|r| r.max_clique as f64).sum::<f64>() / k,
            mean_elapsed_seconds: cell.iter().map(|r| r.elapsed_seconds).sum::<f64>() / k,
            mean_prep_seconds: cell.iter().map(|r| r.prep_seconds).sum::<f64>() / k,
        });
    }
    out
}

fn cmd_bench(args: BenchArgs) -> Result<u8, String> {
    let time_limit = parse_time_limit(args.time_limit)?;
    let jobs = match args.jobs {
        Some(j) => j,
        None => std::env::var(JOBS_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(1),
    };
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }

    let mut strategies: Vec<Strategy> = Vec::new();
    for name in &args.algorithm {
        if name == "all" {
            strategies.extend(Strategy::ALL);
        } else {
            strategies.push(parse_strategy(name, TopOrderingArg::Degeneracy)?);
        }
    }
    strategies.dedup_by_key(|s| s.name());

    let mut sources: Vec<GraphSource> = Vec::new();
    if let Some(values) = &args.random {
        let (n, p) = parse_random_spec(values)?;
        if args.runs == 0 {
            return Err("--runs must be at least 1".into());
        }
        for i in 0..args.runs {
            sources.push(GraphSource::Random {
                n,
                p,
                seed: args.seed + i as u64,
            });
        }
    } else if let Some(k) = args.moon_moser {
        if k == 0 {
            return Err("--moon-moser K must be at least 1".into());
        }
        sources.push(GraphSource::MoonMoser { k });
    } else if !args.input.is_empty() {
        for path in &args.input {
            sources.push(GraphSource::File {
                path: path.clone(),
                format: args.format,
                base: args.edge_base,
            });
        }
    } else {
        return Err("no input: pass --input, --random, or --moon-moser".into());
    }

    struct Task {
        graph: Arc<BitGraph>,
        strategy: Strategy,
        source: String,
        group: String,
    }

    let mut tasks: Vec<Task> = Vec::new();
    for source in &sources {
        let graph = Arc::new(source.load()?);
        for &strategy in &strategies {
            tasks.push(Task {
                graph: Arc::clone(&graph),
                strategy,
                source: source.label(),
                group: source.group_label(),
            });
        }
    }

    let run_task = |task: &Task| -> Result<RunStats, String> {
        let mut cfg = RunConfig::new(task.strategy).with_source(task.source.clone());
        cfg.time_limit = time_limit;
        match run(&task.graph, &cfg, &mut CountSink) {
            Ok(stats) => Ok(stats),
            Err(EnumerateError::TimeLimit(stats)) => Ok(*stats),
            Err(EnumerateError::Sink(e)) => Err(format!("count sink failed: {e}")),
        }
    };

    let results: Vec<Result<RunStats, String>> = if jobs == 1 {
        tasks.iter().map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("building worker pool: {e}"))?;
        pool.install(|| tasks.par_iter().map(run_task).collect())
    };

    let mut rows = Vec::with_capacity(results.len());
    for result in results {
        rows.push(result?);
    }
    let groups: Vec<String> = tasks.iter().map(|t| t.group.clone()).collect();
    let means = mean_rows(&rows, &groups);
    let hit_limit = rows.iter().any(|r| r.partial);

    let text = match args.stats {
        StatsFormat::Csv => {
            let mut buf = Vec::new();
            write_stats_csv(&rows, &mut buf).expect("csv to memory");
            let mut w = csv::Writer::from_writer(Vec::new());
            for mean in &means {
                w.serialize(mean).expect("csv to memory");
            }
            let mean_csv = String::from_utf8(w.into_inner().expect("csv writer")).expect("utf-8");
            format!("{}\n{}", String::from_utf8(buf).expect("utf-8"), mean_csv)
        }
        StatsFormat::Json => {
            let doc = serde_json::json!({ "runs": rows, "means": means });
            let mut text = serde_json::to_string_pretty(&doc).expect("json");
            text.push('\n');
            text
        }
        StatsFormat::Human => {
            let mut text = String::new();
            for row in &rows {
                text.push_str(&row.human());
                text.push('\n');
            }
            for mean in &means {
                let _ = writeln!(
                    text,
                    "mean: strategy={} source={} runs={} cliques={:.1} steps={:.1} \
                     max_clique={:.2} elapsed={:.6}s prep={:.6}s",
                    mean.strategy,
                    mean.source,
                    mean.runs,
                    mean.mean_cliques,
                    mean.mean_steps,
                    mean.mean_max_clique,
                    mean.mean_elapsed_seconds,
                    mean.mean_prep_seconds,
                );
            }
            text
        }
    };
    StatsOut::open(&args.out, false)?.write_all_text(&text)?;

    if hit_limit {
        eprintln!("time limit exceeded on at least one run; partial rows are flagged");
        return Ok(EXIT_TIME_LIMIT);
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let source = resolve_input(&args.input)?;
    let graph = source.load()?;

    let mut reference: Option<Vec<Vec<usize>>> = None;
    let mut agree = true;
    for strategy in Strategy::ALL {
        let mut sink = CollectSink::new();
        let cfg = RunConfig::new(strategy).with_source(source.label());
        let stats = run(&graph, &cfg, &mut sink).map_err(|e| e.to_string())?;
        let cliques = oracle::canonicalize(sink.cliques);
        println!(
            "{:<12} {} cliques, {} steps",
            stats.strategy,
            cliques.len(),
            stats.steps
        );
        match &reference {
            None => reference = Some(cliques),
            Some(want) => {
                if &cliques != want {
                    println!(
                        "{:<12} differs from {}",
                        strategy.name(),
                        Strategy::ALL[0].name()
                    );
                    agree = false;
                }
            }
        }
    }
    if graph.n() <= oracle::MAX_ORACLE_N {
        let want = oracle::maximal_cliques(&graph).map_err(|e| e.to_string())?;
        println!("{:<12} {} cliques", "oracle", want.len());
        if reference.as_ref() != Some(&want) {
            println!("oracle       differs from strategies");
            agree = false;
        }
    } else {
        println!(
            "oracle       skipped (n = {} exceeds bound {})",
            graph.n(),
            oracle::MAX_ORACLE_N
        );
    }
    if agree {
        println!("AGREE");
        Ok(EXIT_OK)
    } else {
        println!("MISMATCH");
        Ok(EXIT_MISMATCH)
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let graph = if let Some(values) = &args.random {
        let (n, p) = parse_random_spec(values)?;
        BitGraph::random(n, p, args.seed)
    } else if let Some(k) = args.moon_moser {
        if k == 0 {
            return Err("--moon-moser K must be at least 1".into());
        }
        BitGraph::moon_moser(k)
    } else {
        return Err("no generator: pass --random or --moon-moser".into());
    };

    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut w = BufWriter::new(file);
            graph
                .write_dimacs(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            graph
                .write_dimacs(&mut w)
                .and_then(|()| w.flush())
                .map_err(|e| format!("writing graph: {e}"))?;
        }
    }
    Ok(EXIT_OK)
}

/// Split a bench CSV into its run-rows document; the mean rows follow a
/// blank line with their own header.
pub fn split_bench_csv(text: &str) -> (&str, &str) {
    match text.split_once("\n\n") {
        Some((runs, means)) => (runs, means),
        None => (text, ""),
    }
}

/// Parse the run-rows section of a bench CSV back into records.
pub fn parse_bench_runs(text: &str) -> csv::Result<Vec<RunStats>> {
    read_stats_csv(split_bench_csv(text).0.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(args)
    }

    #[test]
    fn run_defaults() {
        let cli = parse(&["bitmce", "run", "--random", "10", "0.5"]).unwrap();
        let Command::Run(args) = cli.command else {
            panic!("expected run")
        };
        assert_eq!(args.algorithm, "greedybb");
        assert_eq!(args.sink, SinkMode::Count);
        assert_eq!(args.stats, StatsFormat::Human);
        let source = resolve_input(&args.input).unwrap();
        assert_eq!(source.label(), "random(n=10,p=0.5,seed=1)");
    }

    #[test]
    fn input_source_is_exclusive() {
        assert!(parse(&["bitmce", "run", "--input", "a.col", "--random", "5", "0.5"]).is_err());
        assert!(parse(&["bitmce", "run", "--moon-moser", "2", "--random", "5", "0.5"]).is_err());
        let cli = parse(&["bitmce", "run"]).unwrap();
        let Command::Run(args) = cli.command else {
            panic!("expected run")
        };
        assert!(resolve_input(&args.input).is_err());
    }

    #[test]
    fn random_spec_validation() {
        assert!(parse_random_spec(&["10".into(), "0.5".into()]).is_ok());
        assert!(parse_random_spec(&["0".into(), "0.5".into()]).is_err());
        assert!(parse_random_spec(&["x".into(), "0.5".into()]).is_err());
        assert!(parse_random_spec(&["10".into(), "1.5".into()]).is_err());
        assert!(parse_random_spec(&["10".into(), "NaN".into()]).is_err());
    }

    #[test]
    fn time_limit_validation() {
        assert_eq!(parse_time_limit(None).unwrap(), None);
        assert_eq!(
            parse_time_limit(Some(1.5)).unwrap(),
            Some(Duration::from_secs_f64(1.5))
        );
        assert!(parse_time_limit(Some(0.0)).is_err());
        assert!(parse_time_limit(Some(-3.0)).is_err());
    }

    #[test]
    fn strategy_parsing_with_top_ordering() {
        let s = parse_strategy("bk-ordering", TopOrderingArg::Identity).unwrap();
        assert_eq!(s, Strategy::BkOrdering(TopOrdering::Identity));
        let s = parse_strategy("tomita", TopOrderingArg::Identity).unwrap();
        assert_eq!(s, Strategy::Tomita);
        assert!(parse_strategy("bogus", TopOrderingArg::Degeneracy).is_err());
    }

    #[test]
    fn sniffer_distinguishes_formats() {
        assert_eq!(
            sniff_format("c hi\np edge 3 1\ne 1 2\n"),
            FileFormat::Dimacs
        );
        assert_eq!(sniff_format("\n\np edge 3 0\n"), FileFormat::Dimacs);
        assert_eq!(sniff_format("0 1\n1 2\n"), FileFormat::Edges);
        assert_eq!(sniff_format("# comment\n3 4\n"), FileFormat::Edges);
        assert_eq!(sniff_format(""), FileFormat::Edges);
    }

    #[test]
    fn bench_algorithm_list_expands_all() {
        let cli = parse(&[
            "bitmce",
            "bench",
            "--random",
            "10",
            "0.3",
            "--algorithm",
            "greedybb,tomita",
        ])
        .unwrap();
        let Command::Bench(args) = cli.command else {
            panic!("expected bench")
        };
        assert_eq!(args.algorithm, vec!["greedybb", "tomita"]);
        assert_eq!(args.runs, 10);
    }

    #[test]
    fn mean_rows_group_by_source_and_strategy() {
        let mk = |strategy: &str, source: &str, cliques: u64, steps: u64| RunStats {
            strategy: strategy.into(),
            source: source.into(),
            n: 5,
            m: 4,
            density: 0.4,
            cliques,
            steps,
            max_clique: 2,
            elapsed_seconds: 1.0,
            prep_seconds: 0.0,
            pivot_scans: 0,
            partial: false,
        };
        let rows = vec![
            mk("greedybb", "random(n=5,p=0.4,seed=1)", 4, 10),
            mk("tomita", "random(n=5,p=0.4,seed=1)", 4, 12),
            mk("greedybb", "random(n=5,p=0.4,seed=2)", 6, 14),
            mk("tomita", "random(n=5,p=0.4,seed=2)", 6, 18),
        ];
        let groups = vec![
            "random(n=5,p=0.4)".to_string(),
            "random(n=5,p=0.4)".to_string(),
            "random(n=5,p=0.4)".to_string(),
            "random(n=5,p=0.4)".to_string(),
        ];
        let means = mean_rows(&rows, &groups);
        assert_eq!(means.len(), 2);
        assert_eq!(means[0].strategy, "greedybb");
        assert_eq!(means[0].runs, 2);
        assert_eq!(means[0].mean_cliques, 5.0);
        assert_eq!(means[1].mean_steps, 15.0);
    }

    #[test]
    fn bench_csv_splits_into_sections() {
        let text = "a,b\n1,2\n\nc,d\n3,4\n";
        let (runs, means) = split_bench_csv(text);
        assert_eq!(runs, "a,b\n1,2");
        assert_eq!(means, "c,d\n3,4\n");
    }
}
