//! C ABI over the enumeration library.
//!
//! Graphs travel as opaque `McGraph` pointers created and destroyed
//! here. Every entry point returns an `McStatus`; on failure a
//! thread-local message is retrievable through `mce_last_error` until
//! the next failing call on the same thread. Callbacks receive cliques
//! as arrays of `u32` vertex labels.

use std::cell::RefCell;
use std::ffi::{c_char, c_void, CStr, CString};
use std::io;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use bitmce::enumerate::{
    run, CliqueSink, CountSink, EnumerateError, RunConfig, RunStats, Strategy,
};
use bitmce::graph::BitGraph;

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    Parse = 3,
    Io = 4,
    UnknownStrategy = 5,
    CallbackAbort = 6,
    TimeLimit = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct McGraph {
    inner: BitGraph,
}

/// Counters and timings of one enumeration run.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct McStats {
    pub n: u64,
    pub m: u64,
    pub density: f64,
    pub cliques: u64,
    pub steps: u64,
    pub max_clique: u64,
    pub elapsed_seconds: f64,
    pub prep_seconds: f64,
    pub pivot_scans: u64,
    /// Nonzero when the run stopped early; counters cover the explored part.
    pub partial: bool,
}

/// Visitor for `mce_enumerate_with_callback`: receives each maximal
/// clique as `len` vertex labels; a nonzero return aborts enumeration.
pub type McCliqueCallback =
    Option<unsafe extern "C" fn(vertices: *const u32, len: usize, user: *mut c_void) -> i32>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message).unwrap_or_else(|_| CString::new("invalid error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn fail(status: McStatus, message: String) -> McStatus {
    set_last_error(message);
    status
}

/// Message of the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn mce_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |msg| msg.as_ptr())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mce_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Number of built-in strategies.
#[no_mangle]
pub extern "C" fn mce_strategy_count() -> usize {
    Strategy::ALL.len()
}

/// Name of the strategy at `index`, or null when out of range. The
/// returned strings are static and usable as the `strategy` argument
/// of the enumeration calls.
#[no_mangle]
pub extern "C" fn mce_strategy_name(index: usize) -> *const c_char {
    match index {
        0 => "bk-plain\0",
        1 => "tomita\0",
        2 => "naude\0",
        3 => "bk-ordering\0",
        4 => "greedybb\0",
        5 => "greedybbtx\0",
        6 => "greedybbnx\0",
        7 => "tomitabb\0",
        _ => return std::ptr::null(),
    }
    .as_ptr() as *const c_char
}

fn graph_out(out: *mut *mut McGraph, graph: BitGraph) -> McStatus {
    if out.is_null() {
        return fail(McStatus::NullArgument, "out pointer is null".into());
    }
    let handle = Box::new(McGraph { inner: graph });
    unsafe { *out = Box::into_raw(handle) };
    McStatus::Ok
}

fn guarded<F: FnOnce() -> McStatus>(body: F) -> McStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(McStatus::Panic, format!("internal panic: {message}"))
        }
    }
}

/// Build a seeded uniform random graph.
///
/// # Safety
/// `out` must be a valid pointer to an `McGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_random(
    n: u64,
    p: f64,
    seed: u64,
    out: *mut *mut McGraph,
) -> McStatus {
    guarded(|| {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return fail(
                McStatus::InvalidArgument,
                format!("edge probability must lie in [0, 1], got {p}"),
            );
        }
        let n = match usize::try_from(n) {
            Ok(n) if n <= u32::MAX as usize => n,
            _ => {
                return fail(
                    McStatus::InvalidArgument,
                    format!("vertex count {n} out of range"),
                )
            }
        };
        graph_out(out, BitGraph::random(n, p, seed))
    })
}

/// Build the complete k-partite graph with parts of size 3.
///
/// # Safety
/// `out` must be a valid pointer to an `McGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_moon_moser(k: u64, out: *mut *mut McGraph) -> McStatus {
    guarded(|| {
        let k = match usize::try_from(k) {
            Ok(k) if k >= 1 && k <= (u32::MAX as usize) / 3 => k,
            _ => {
                return fail(
                    McStatus::InvalidArgument,
                    format!("part count {k} out of range"),
                )
            }
        };
        graph_out(out, BitGraph::moon_moser(k))
    })
}

/// Parse a DIMACS graph from a NUL-terminated string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to an `McGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut McGraph,
) -> McStatus {
    guarded(|| {
        if text.is_null() {
            return fail(McStatus::NullArgument, "text is null".into());
        }
        let text = match unsafe { CStr::from_ptr(text) }.to_str() {
            Ok(text) => text,
            Err(_) => return fail(McStatus::InvalidArgument, "text is not UTF-8".into()),
        };
        match BitGraph::from_dimacs_str(text) {
            Ok(graph) => graph_out(out, graph),
            Err(e) => fail(McStatus::Parse, e.to_string()),
        }
    })
}

/// Read and parse a DIMACS graph file.
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to an `McGraph*` slot.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_from_dimacs_path(
    path: *const c_char,
    out: *mut *mut McGraph,
) -> McStatus {
    guarded(|| {
        if path.is_null() {
            return fail(McStatus::NullArgument, "path is null".into());
        }
        let path = match unsafe { CStr::from_ptr(path) }.to_str() {
            Ok(path) => path,
            Err(_) => return fail(McStatus::InvalidArgument, "path is not UTF-8".into()),
        };
        let text = match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => return fail(McStatus::Io, format!("{path}: {e}")),
        };
        match BitGraph::from_dimacs_str(&text) {
            Ok(graph) => graph_out(out, graph),
            Err(e) => fail(McStatus::Parse, format!("{path}: {e}")),
        }
    })
}

/// Destroy a graph created by this library. Null is a no-op.
///
/// # Safety
/// `graph` must be null or a pointer obtained from an `mce_graph_*`
/// constructor, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_free(graph: *mut McGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_vertex_count(graph: *const McGraph) -> u64 {
    match unsafe { graph.as_ref() } {
        Some(g) => g.inner.n() as u64,
        None => 0,
    }
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn mce_graph_edge_count(graph: *const McGraph) -> u64 {
    match unsafe { graph.as_ref() } {
        Some(g) => g.inner.m() as u64,
        None => 0,
    }
}

fn to_mc_stats(stats: &RunStats) -> McStats {
    McStats {
        n: stats.n as u64,
        m: stats.m as u64,
        density: stats.density,
        cliques: stats.cliques,
        steps: stats.steps,
        max_clique: stats.max_clique as u64,
        elapsed_seconds: stats.elapsed_seconds,
        prep_seconds: stats.prep_seconds,
        pivot_scans: stats.pivot_scans,
        partial: stats.partial,
    }
}

struct CallbackSink {
    callback: unsafe extern "C" fn(*const u32, usize, *mut c_void) -> i32,
    user: *mut c_void,
    buffer: Vec<u32>,
    aborted: bool,
}

impl CliqueSink for CallbackSink {
    fn report(&mut self, clique: &[usize]) -> io::Result<()> {
        self.buffer.clear();
        self.buffer.extend(clique.iter().map(|&v| v as u32));
        let verdict =
            unsafe { (self.callback)(self.buffer.as_ptr(), self.buffer.len(), self.user) };
        if verdict != 0 {
            self.aborted = true;
            return Err(io::Error::other("aborted by callback"));
        }
        Ok(())
    }
}

fn parse_strategy(strategy: *const c_char) -> Result<Strategy, McStatus> {
    if strategy.is_null() {
        set_last_error("strategy is null".into());
        return Err(McStatus::NullArgument);
    }
    let name = match unsafe { CStr::from_ptr(strategy) }.to_str() {
        Ok(name) => name,
        Err(_) => {
            set_last_error("strategy is not UTF-8".into());
            return Err(McStatus::InvalidArgument);
        }
    };
    name.parse().map_err(|e: String| {
        set_last_error(e);
        McStatus::UnknownStrategy
    })
}

fn run_config(strategy: Strategy, time_limit_ms: u64) -> RunConfig {
    let mut cfg = RunConfig::new(strategy);
    if time_limit_ms > 0 {
        cfg.time_limit = Some(Duration::from_millis(time_limit_ms));
    }
    cfg
}

fn finish(
    outcome: Result<RunStats, EnumerateError>,
    aborted_by_callback: bool,
    stats_out: *mut McStats,
) -> McStatus {
    match outcome {
        Ok(stats) => {
            if !stats_out.is_null() {
                unsafe { *stats_out = to_mc_stats(&stats) };
            }
            McStatus::Ok
        }
        Err(EnumerateError::TimeLimit(stats)) => {
            if !stats_out.is_null() {
                unsafe { *stats_out = to_mc_stats(&stats) };
            }
            fail(McStatus::TimeLimit, "time limit exceeded".into())
        }
        Err(EnumerateError::Sink(e)) => {
            if aborted_by_callback {
                fail(McStatus::CallbackAbort, "aborted by callback".into())
            } else {
                fail(McStatus::Io, format!("clique sink failed: {e}"))
            }
        }
    }
}

/// Count the maximal cliques of `graph` with the named strategy.
/// `time_limit_ms` of 0 means no limit. `stats_out` may be null.
///
/// # Safety
/// `graph` must be a live handle; `strategy` must be a valid
/// NUL-terminated string; `stats_out` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn mce_enumerate(
    graph: *const McGraph,
    strategy: *const c_char,
    time_limit_ms: u64,
    stats_out: *mut McStats,
) -> McStatus {
    guarded(|| {
        let graph = match unsafe { graph.as_ref() } {
            Some(g) => g,
            None => return fail(McStatus::NullArgument, "graph is null".into()),
        };
        let strategy = match parse_strategy(strategy) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let cfg = run_config(strategy, time_limit_ms);
        finish(run(&graph.inner, &cfg, &mut CountSink), false, stats_out)
    })
}

/// Enumerate maximal cliques, handing each to `callback` as an array
/// of vertex labels. A nonzero callback return aborts the run.
/// `time_limit_ms` of 0 means no limit. `stats_out` may be null.
///
/// # Safety
/// `graph` must be a live handle; `strategy` must be a valid
/// NUL-terminated string; `callback` must be safe to call with the
/// given `user` pointer for the duration of this call; `stats_out`
/// must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn mce_enumerate_with_callback(
    graph: *const McGraph,
    strategy: *const c_char,
    time_limit_ms: u64,
    callback: McCliqueCallback,
    user: *mut c_void,
    stats_out: *mut McStats,
) -> McStatus {
    guarded(|| {
        let graph = match unsafe { graph.as_ref() } {
            Some(g) => g,
            None => return fail(McStatus::NullArgument, "graph is null".into()),
        };
        let callback = match callback {
            Some(callback) => callback,
            None => return fail(McStatus::NullArgument, "callback is null".into()),
        };
        let strategy = match parse_strategy(strategy) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let cfg = run_config(strategy, time_limit_ms);
        let mut sink = CallbackSink {
            callback,
            user,
            buffer: Vec::new(),
            aborted: false,
        };
        let outcome = run(&graph.inner, &cfg, &mut sink);
        finish(outcome, sink.aborted, stats_out)
    })
}
