//! Exercises the C entry points the way a foreign caller would.

use std::ffi::{c_void, CStr, CString};
use std::ptr;

use bitmce_ffi::{
    mce_enumerate, mce_enumerate_with_callback, mce_graph_edge_count, mce_graph_free,
    mce_graph_from_dimacs, mce_graph_from_dimacs_path, mce_graph_moon_moser, mce_graph_random,
    mce_graph_vertex_count, mce_last_error, mce_strategy_count, mce_strategy_name, mce_version,
    McGraph, McStats, McStatus,
};

fn blank_stats() -> McStats {
    McStats {
        n: 0,
        m: 0,
        density: 0.0,
        cliques: 0,
        steps: 0,
        max_clique: 0,
        elapsed_seconds: 0.0,
        prep_seconds: 0.0,
        pivot_scans: 0,
        partial: false,
    }
}

fn last_error_text() -> String {
    let ptr = mce_last_error();
    assert!(!ptr.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string()
}

fn make_random(n: u64, p: f64, seed: u64) -> *mut McGraph {
    let mut graph: *mut McGraph = ptr::null_mut();
    let status = unsafe { mce_graph_random(n, p, seed, &mut graph) };
    assert_eq!(status, McStatus::Ok);
    assert!(!graph.is_null());
    graph
}

#[test]
fn random_graph_round_trip() {
    let graph = make_random(50, 0.5, 7);
    let n = unsafe { mce_graph_vertex_count(graph) };
    let m = unsafe { mce_graph_edge_count(graph) };
    assert_eq!(n, 50);
    assert!(m > 400 && m < 800, "m = {m}");
    unsafe { mce_graph_free(graph) };
    unsafe { mce_graph_free(ptr::null_mut()) };
}

#[test]
fn rejects_bad_probability_and_null_out() {
    let mut graph: *mut McGraph = ptr::null_mut();
    let status = unsafe { mce_graph_random(10, 1.5, 1, &mut graph) };
    assert_eq!(status, McStatus::InvalidArgument);
    assert!(graph.is_null());
    assert!(last_error_text().contains("probability"));

    let status = unsafe { mce_graph_random(10, 0.5, 1, ptr::null_mut()) };
    assert_eq!(status, McStatus::NullArgument);
}

#[test]
fn moon_moser_counts_through_ffi() {
    let mut graph: *mut McGraph = ptr::null_mut();
    assert_eq!(unsafe { mce_graph_moon_moser(4, &mut graph) }, McStatus::Ok);
    let name = CString::new("greedybb").unwrap();
    let mut stats = blank_stats();
    let status = unsafe { mce_enumerate(graph, name.as_ptr(), 0, &mut stats) };
    assert_eq!(status, McStatus::Ok);
    assert_eq!(stats.cliques, 81);
    assert_eq!(stats.n, 12);
    assert_eq!(stats.max_clique, 4);
    assert!(!stats.partial);
    assert!(stats.steps > 0);
    unsafe { mce_graph_free(graph) };
}

#[test]
fn every_listed_strategy_enumerates() {
    let graph = make_random(20, 0.5, 3);
    let mut counts = Vec::new();
    for i in 0..mce_strategy_count() {
        let name = mce_strategy_name(i);
        assert!(!name.is_null());
        let mut stats = blank_stats();
        let status = unsafe { mce_enumerate(graph, name, 0, &mut stats) };
        assert_eq!(status, McStatus::Ok);
        counts.push(stats.cliques);
    }
    assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
    assert!(mce_strategy_name(mce_strategy_count()).is_null());
    for (i, strategy) in bitmce::enumerate::Strategy::ALL.iter().enumerate() {
        let name = unsafe { CStr::from_ptr(mce_strategy_name(i)) };
        assert_eq!(name.to_str().unwrap(), strategy.name());
    }
    unsafe { mce_graph_free(graph) };
}

#[test]
fn unknown_strategy_is_reported() {
    let graph = make_random(10, 0.5, 1);
    let name = CString::new("dinitz").unwrap();
    let status = unsafe { mce_enumerate(graph, name.as_ptr(), 0, ptr::null_mut()) };
    assert_eq!(status, McStatus::UnknownStrategy);
    assert!(last_error_text().contains("dinitz"));
    let status = unsafe { mce_enumerate(graph, ptr::null(), 0, ptr::null_mut()) };
    assert_eq!(status, McStatus::NullArgument);
    unsafe { mce_graph_free(graph) };
}

#[test]
fn dimacs_parse_and_error_path() {
    let text = CString::new("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
    let mut graph: *mut McGraph = ptr::null_mut();
    assert_eq!(
        unsafe { mce_graph_from_dimacs(text.as_ptr(), &mut graph) },
        McStatus::Ok
    );
    assert_eq!(unsafe { mce_graph_vertex_count(graph) }, 3);
    assert_eq!(unsafe { mce_graph_edge_count(graph) }, 3);
    unsafe { mce_graph_free(graph) };

    let bad = CString::new("p edge 2 1\ne 1 5\n").unwrap();
    let mut graph: *mut McGraph = ptr::null_mut();
    let status = unsafe { mce_graph_from_dimacs(bad.as_ptr(), &mut graph) };
    assert_eq!(status, McStatus::Parse);
    assert!(graph.is_null());
    assert!(
        last_error_text().contains("line 2"),
        "{}",
        last_error_text()
    );
}

#[test]
fn dimacs_path_io_and_parse() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.col");
    std::fs::write(
        &path,
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    )
    .unwrap();
    let cpath = CString::new(path.to_str().unwrap()).unwrap();
    let mut graph: *mut McGraph = ptr::null_mut();
    assert_eq!(
        unsafe { mce_graph_from_dimacs_path(cpath.as_ptr(), &mut graph) },
        McStatus::Ok
    );
    let name = CString::new("tomita").unwrap();
    let mut stats = blank_stats();
    assert_eq!(
        unsafe { mce_enumerate(graph, name.as_ptr(), 0, &mut stats) },
        McStatus::Ok
    );
    assert_eq!(stats.cliques, 1);
    assert_eq!(stats.max_clique, 4);
    unsafe { mce_graph_free(graph) };

    let missing = CString::new("/no/such/file.col").unwrap();
    let status = unsafe { mce_graph_from_dimacs_path(missing.as_ptr(), &mut graph) };
    assert_eq!(status, McStatus::Io);
}

struct Collected {
    cliques: Vec<Vec<u32>>,
    abort_after: usize,
}

unsafe extern "C" fn collect_cb(vertices: *const u32, len: usize, user: *mut c_void) -> i32 {
    let state = unsafe { &mut *(user as *mut Collected) };
    let clique = unsafe { std::slice::from_raw_parts(vertices, len) }.to_vec();
    state.cliques.push(clique);
    if state.cliques.len() >= state.abort_after {
        1
    } else {
        0
    }
}

#[test]
fn callback_receives_dimacs_labels() {
    let text = CString::new("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
    let mut graph: *mut McGraph = ptr::null_mut();
    assert_eq!(
        unsafe { mce_graph_from_dimacs(text.as_ptr(), &mut graph) },
        McStatus::Ok
    );
    let mut state = Collected {
        cliques: Vec::new(),
        abort_after: usize::MAX,
    };
    let name = CString::new("greedybb").unwrap();
    let mut stats = blank_stats();
    let status = unsafe {
        mce_enumerate_with_callback(
            graph,
            name.as_ptr(),
            0,
            Some(collect_cb),
            &mut state as *mut Collected as *mut c_void,
            &mut stats,
        )
    };
    assert_eq!(status, McStatus::Ok);
    assert_eq!(stats.cliques, 3);
    state.cliques.sort();
    assert_eq!(state.cliques, vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
    unsafe { mce_graph_free(graph) };
}

#[test]
fn callback_abort_stops_enumeration() {
    let mut graph: *mut McGraph = ptr::null_mut();
    assert_eq!(unsafe { mce_graph_moon_moser(5, &mut graph) }, McStatus::Ok);
    let mut state = Collected {
        cliques: Vec::new(),
        abort_after: 10,
    };
    let name = CString::new("tomita").unwrap();
    let status = unsafe {
        mce_enumerate_with_callback(
            graph,
            name.as_ptr(),
            0,
            Some(collect_cb),
            &mut state as *mut Collected as *mut c_void,
            ptr::null_mut(),
        )
    };
    assert_eq!(status, McStatus::CallbackAbort);
    assert_eq!(state.cliques.len(), 10);

    let status = unsafe {
        mce_enumerate_with_callback(
            graph,
            name.as_ptr(),
            0,
            None,
            ptr::null_mut(),
            ptr::null_mut(),
        )
    };
    assert_eq!(status, McStatus::NullArgument);
    unsafe { mce_graph_free(graph) };
}

#[test]
fn time_limit_reports_partial_stats() {
    let graph = make_random(80, 0.9, 1);
    let name = CString::new("bk-plain").unwrap();
    let mut stats = blank_stats();
    let status = unsafe { mce_enumerate(graph, name.as_ptr(), 1, &mut stats) };
    assert_eq!(status, McStatus::TimeLimit);
    assert!(stats.partial);
    assert!(stats.steps > 0);
    unsafe { mce_graph_free(graph) };
}

#[test]
fn version_and_header_exist() {
    let version = unsafe { CStr::from_ptr(mce_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));

    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("bitmce.h");
    let text = std::fs::read_to_string(&header).expect("generated header");
    for needle in [
        "BITMCE_H",
        "McStatus",
        "McStats",
        "McGraph",
        "mce_enumerate_with_callback",
        "mce_last_error",
    ] {
        assert!(text.contains(needle), "{needle} missing from header");
    }
}

#[test]
fn null_graph_is_rejected() {
    let name = CString::new("greedybb").unwrap();
    let status = unsafe { mce_enumerate(ptr::null(), name.as_ptr(), 0, ptr::null_mut()) };
    assert_eq!(status, McStatus::NullArgument);
    assert_eq!(unsafe { mce_graph_vertex_count(ptr::null()) }, 0);
    assert_eq!(unsafe { mce_graph_edge_count(ptr::null()) }, 0);
}

const _: fn() = || {
    fn assert_send<T: Send>() {}
    // Graph handles hold only owned data; foreign callers may move them
    // across threads.
    assert_send::<McGraph>();
};
