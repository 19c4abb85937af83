//! The Bron-Kerbosch engine and its pivot-strategy family.
//!
//! One recursive core serves every strategy; a [`Strategy`] only decides
//! the pivot rule and whether the graph is renumbered by max-degree-first
//! order before the recursion starts. Keeping the plumbing identical makes
//! cross-strategy comparisons meaningful: step counts differ because pivot
//! choices differ, not because the variants branch or recurse differently.
//!
//! The recursion maintains the classical state (P, R, X): P holds
//! candidates that extend the clique R, X holds vertices already expanded
//! elsewhere, and P ∪ X is the common neighborhood of R throughout. A node
//! with P and X both empty reports R as a maximal clique.

mod engine;
mod pivot;
mod sink;
mod stats;

pub use pivot::{branch_set, pivot_greedy, pivot_naude, pivot_tomita, GreedyVariant};
pub use sink::{CliqueSink, CollectSink, CountSink, StreamSink};
pub use stats::{read_stats_csv, write_stats_csv, RunStats};

use std::borrow::Cow;
use std::fmt;
use std::io;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::graph::BitGraph;
use crate::ordering::{self, VertexOrdering};
use engine::{Abort, Engine};
use pivot::PivotRule;

/// One of the eight enumeration strategies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// No pivoting: branch on every vertex of P.
    BkPlain,
    /// Pivot maximizing |P ∩ N(p)| over P ∪ X, full scoring scan.
    Tomita,
    /// Same pivot value as `Tomita`, found with an early-exit scan.
    Naude,
    /// A top-level vertex ordering seeds one subproblem per vertex (P =
    /// later neighbors, X = earlier neighbors); the inner recursion pivots
    /// as `Tomita`.
    BkOrdering(TopOrdering),
    /// Constant-time greedy pivot on the renumbered graph: first vertex of
    /// X, else first vertex of P.
    GreedyBb,
    /// Scored pivot restricted to X on the renumbered graph; first vertex
    /// of P when X is empty.
    GreedyBbTx,
    /// `GreedyBbTx` with the early-exit scoring scan.
    GreedyBbNx,
    /// `Tomita` pivoting on the renumbered graph.
    TomitaBb,
}

/// Which ordering seeds the top level of [`Strategy::BkOrdering`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TopOrdering {
    #[default]
    Degeneracy,
    MaxDegreeFirst,
    Identity,
}

impl Strategy {
    /// Every strategy, in canonical order. `bk-ordering` appears with its
    /// default degeneracy top ordering.
    pub const ALL: [Strategy; 8] = [
        Strategy::BkPlain,
        Strategy::Tomita,
        Strategy::Naude,
        Strategy::BkOrdering(TopOrdering::Degeneracy),
        Strategy::GreedyBb,
        Strategy::GreedyBbTx,
        Strategy::GreedyBbNx,
        Strategy::TomitaBb,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::BkPlain => "bk-plain",
            Strategy::Tomita => "tomita",
            Strategy::Naude => "naude",
            Strategy::BkOrdering(_) => "bk-ordering",
            Strategy::GreedyBb => "greedybb",
            Strategy::GreedyBbTx => "greedybbtx",
            Strategy::GreedyBbNx => "greedybbnx",
            Strategy::TomitaBb => "tomitabb",
        }
    }

    /// True for the strategies that renumber the graph by max-degree-first
    /// order before enumerating.
    fn renumbers(&self) -> bool {
        matches!(
            self,
            Strategy::GreedyBb | Strategy::GreedyBbTx | Strategy::GreedyBbNx | Strategy::TomitaBb
        )
    }

    fn rule(&self) -> PivotRule {
        match self {
            Strategy::BkPlain => PivotRule::None,
            Strategy::Tomita | Strategy::TomitaBb | Strategy::BkOrdering(_) => {
                PivotRule::ScoredUnion { early_exit: false }
            }
            Strategy::Naude => PivotRule::ScoredUnion { early_exit: true },
            Strategy::GreedyBb => PivotRule::FirstOfXElseP,
            Strategy::GreedyBbTx => PivotRule::ScoredXElseFirstP { early_exit: false },
            Strategy::GreedyBbNx => PivotRule::ScoredXElseFirstP { early_exit: true },
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bk-plain" => Ok(Strategy::BkPlain),
            "tomita" => Ok(Strategy::Tomita),
            "naude" => Ok(Strategy::Naude),
            "bk-ordering" => Ok(Strategy::BkOrdering(TopOrdering::default())),
            "greedybb" => Ok(Strategy::GreedyBb),
            "greedybbtx" => Ok(Strategy::GreedyBbTx),
            "greedybbnx" => Ok(Strategy::GreedyBbNx),
            "tomitabb" => Ok(Strategy::TomitaBb),
            other => Err(format!(
                "unknown strategy {other:?} (expected one of: bk-plain, tomita, naude, \
                 bk-ordering, greedybb, greedybbtx, greedybbnx, tomitabb)"
            )),
        }
    }
}

/// Settings for one enumeration run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub strategy: Strategy,
    /// Abort enumeration once this much wall time has passed.
    pub time_limit: Option<Duration>,
    /// Assert the full Bron-Kerbosch invariant at every node. Expensive;
    /// meant for tests and debugging.
    pub check_invariants: bool,
    /// Free-form description of where the graph came from, copied into the
    /// stats record.
    pub source: String,
}

impl RunConfig {
    pub fn new(strategy: Strategy) -> Self {
        RunConfig {
            strategy,
            time_limit: None,
            check_invariants: false,
            source: String::new(),
        }
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = source.into();
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// Failure of an enumeration run.
#[derive(Debug)]
pub enum EnumerateError {
    /// The time limit expired; the boxed stats cover the work completed
    /// before the abort and carry `partial = true`.
    TimeLimit(Box<RunStats>),
    /// The clique sink failed to accept a report.
    Sink(io::Error),
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::TimeLimit(stats) => write!(
                f,
                "time limit exceeded after {} steps and {} cliques",
                stats.steps, stats.cliques
            ),
            EnumerateError::Sink(e) => write!(f, "clique sink failed: {e}"),
        }
    }
}

impl std::error::Error for EnumerateError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            EnumerateError::Sink(e) => Some(e),
            EnumerateError::TimeLimit(_) => None,
        }
    }
}

/// Callback invoked at every internal node with the current (P, X) state
/// and the graph the engine is actually recursing on (renumbered for the
/// strategies that renumber).
pub type Observer<'a> = &'a mut dyn FnMut(&BitSet, &BitSet, &BitGraph);

/// Enumerate all maximal cliques of `g`, feeding each one to `sink` as a
/// sorted slice of external labels. Returns the run's statistics.
pub fn run<S: CliqueSink>(
    g: &BitGraph,
    cfg: &RunConfig,
    sink: &mut S,
) -> Result<RunStats, EnumerateError> {
    let plan = Plan::for_strategy(g, cfg.strategy);
    execute(g, plan, cfg.strategy.name(), cfg, sink, None)
}

/// As [`run`], additionally invoking `observer` at every internal node
/// before pivot selection. P is nonempty at every callback.
pub fn run_observed<S: CliqueSink>(
    g: &BitGraph,
    cfg: &RunConfig,
    sink: &mut S,
    observer: Observer<'_>,
) -> Result<RunStats, EnumerateError> {
    let plan = Plan::for_strategy(g, cfg.strategy);
    execute(g, plan, cfg.strategy.name(), cfg, sink, Some(observer))
}

/// Ordering-driven enumeration with an explicit top-level ordering: vertex
/// `top[i]` seeds a subproblem with P = its later neighbors, X = its
/// earlier neighbors, R = {v}. The inner recursion uses `inner`'s pivot
/// rule on the graph as given (no renumbering).
pub fn run_with_ordering<S: CliqueSink>(
    g: &BitGraph,
    top: &VertexOrdering,
    inner: Strategy,
    sink: &mut S,
) -> Result<RunStats, EnumerateError> {
    assert_eq!(top.n(), g.n(), "ordering length must equal n");
    let plan = Plan {
        graph: Cow::Borrowed(g),
        seeds: Some(top.clone()),
        rule: inner.rule(),
        prep_seconds: 0.0,
    };
    let cfg = RunConfig::new(Strategy::BkOrdering(TopOrdering::Identity));
    execute(g, plan, "bk-ordering", &cfg, sink, None)
}

/// Everything decided before the recursion starts.
struct Plan<'g> {
    graph: Cow<'g, BitGraph>,
    /// Present for ordering-driven runs: seed one subproblem per vertex.
    seeds: Option<VertexOrdering>,
    rule: PivotRule,
    prep_seconds: f64,
}

impl<'g> Plan<'g> {
    fn for_strategy(g: &'g BitGraph, strategy: Strategy) -> Self {
        let start = Instant::now();
        let (graph, seeds) = if strategy.renumbers() {
            (Cow::Owned(ordering::prepare(g).0), None)
        } else if let Strategy::BkOrdering(top) = strategy {
            let ord = match top {
                TopOrdering::Degeneracy => ordering::degeneracy(g).0,
                TopOrdering::MaxDegreeFirst => ordering::max_degree_first(g),
                TopOrdering::Identity => VertexOrdering::identity(g.n()),
            };
            (Cow::Borrowed(g), Some(ord))
        } else {
            (Cow::Borrowed(g), None)
        };
        Plan {
            graph,
            seeds,
            rule: strategy.rule(),
            prep_seconds: start.elapsed().as_secs_f64(),
        }
    }
}

fn execute<S: CliqueSink>(
    original: &BitGraph,
    plan: Plan<'_>,
    strategy_name: &str,
    cfg: &RunConfig,
    sink: &mut S,
    observer: Option<Observer<'_>>,
) -> Result<RunStats, EnumerateError> {
    let deadline = cfg.time_limit.map(|limit| Instant::now() + limit);
    let mut engine = Engine::new(
        &plan.graph,
        plan.rule,
        sink,
        deadline,
        cfg.check_invariants,
        observer,
    );
    let start = Instant::now();
    let outcome = match &plan.seeds {
        None => engine.run_full(),
        Some(ord) => engine.run_seeded(ord),
    };
    let stats = RunStats {
        strategy: strategy_name.to_string(),
        source: cfg.source.clone(),
        n: original.n(),
        m: original.m(),
        density: original.density(),
        cliques: engine.cliques,
        steps: engine.steps,
        max_clique: engine.max_clique,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        prep_seconds: plan.prep_seconds,
        pivot_scans: engine.pivot_scans,
        partial: false,
    };
    match outcome {
        Ok(()) => Ok(stats),
        Err(Abort::TimeLimit) => Err(EnumerateError::TimeLimit(Box::new(RunStats {
            partial: true,
            ..stats
        }))),
        Err(Abort::Sink(e)) => Err(EnumerateError::Sink(e)),
    }
}
