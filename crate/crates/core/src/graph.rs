//! Undirected graphs as bit-matrix adjacency, plus readers, writers and
//! generators.
//!
//! `BitGraph` stores one adjacency row per vertex and, alongside it, the
//! precomputed complement row used by pivot-based branching (the branch set
//! is `P & !N(pivot)`, computed as one AND against the complement row).
//! Neither row contains the vertex itself.

use std::fmt;
use std::io::{self, BufRead, Write};

use crate::bitset::BitSet;
use crate::ordering::VertexOrdering;
use crate::rng::Xoshiro256StarStar;

/// Undirected graph on vertices `0..n` with bitstring adjacency rows.
#[derive(Clone)]
pub struct BitGraph {
    n: usize,
    m: usize,
    adj: Vec<BitSet>,
    comp: Vec<BitSet>,
    labels: Option<Vec<usize>>,
}

impl BitGraph {
    /// Build from an edge list over vertices `0..n`. Self loops and
    /// duplicate edges are ignored.
    ///
    /// Panics if an endpoint is out of range.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        BitGraph::from_adjacency(adj, None)
    }

    fn from_adjacency(adj: Vec<BitSet>, labels: Option<Vec<usize>>) -> Self {
        let n = adj.len();
        let mut m = 0;
        let mut comp = Vec::with_capacity(n);
        let full = BitSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            m += row.count();
            let mut c = full.and_not(row);
            if n > 0 {
                c.remove(v);
            }
            comp.push(c);
        }
        BitGraph {
            n,
            m: m / 2,
            adj,
            comp,
            labels,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = BitSet::full(n);
            row.remove(v);
            adj.push(row);
        }
        BitGraph::from_adjacency(adj, None)
    }

    /// Erdos-Renyi G(n, p) with a fixed generator (xoshiro256** seeded via
    /// splitmix64), so a `(n, p, seed)` triple names one graph forever.
    ///
    /// Pairs `(u, v)` with `u < v` are visited in lexicographic order; each
    /// consumes exactly one `f64` draw and the edge exists iff the draw is
    /// below `p`.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        assert!((0.0..=1.0).contains(&p), "p = {p} outside [0, 1]");
        let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
        let mut adj = vec![BitSet::new(n); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.next_f64() < p {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        BitGraph::from_adjacency(adj, None)
    }

    /// Complete k-partite graph with parts of size 3 (the Moon-Moser graph
    /// on `3k` vertices). It attains the maximum possible number of maximal
    /// cliques, `3^k`, making clique counts easy to validate at scale.
    pub fn moon_moser(k: usize) -> Self {
        let n = 3 * k;
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = BitSet::full(n);
            let part = v / 3;
            row.remove(3 * part);
            row.remove(3 * part + 1);
            row.remove(3 * part + 2);
            adj.push(row);
        }
        BitGraph::from_adjacency(adj, None)
    }

    /// Parse DIMACS text: optional `c` comment lines, one `p edge <n> <m>`
    /// problem line (`p col` is accepted), then `e <u> <v>` lines with
    /// 1-indexed endpoints. Duplicate edges and self loops are tolerated;
    /// the declared edge count is advisory.
    pub fn from_dimacs(reader: impl BufRead) -> Result<Self, ParseError> {
        let mut adj: Option<Vec<BitSet>> = None;
        let mut n = 0;
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| ParseError::new(lineno, format!("read failed: {e}")))?;
            let mut tokens = line.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            match head {
                "c" => {}
                "p" => {
                    if adj.is_some() {
                        return Err(ParseError::new(lineno, "duplicate problem line"));
                    }
                    let format = tokens
                        .next()
                        .ok_or_else(|| ParseError::new(lineno, "problem line missing format"))?;
                    if format != "edge" && format != "col" {
                        return Err(ParseError::new(
                            lineno,
                            format!("unsupported problem format {format:?}"),
                        ));
                    }
                    n = parse_count(tokens.next(), lineno, "vertex count")?;
                    parse_count(tokens.next(), lineno, "edge count")?;
                    if n == 0 {
                        return Err(ParseError::new(lineno, "vertex count must be positive"));
                    }
                    adj = Some(vec![BitSet::new(n); n]);
                }
                "e" => {
                    let Some(adj) = adj.as_mut() else {
                        return Err(ParseError::new(lineno, "edge before problem line"));
                    };
                    let u = parse_count(tokens.next(), lineno, "edge endpoint")?;
                    let v = parse_count(tokens.next(), lineno, "edge endpoint")?;
                    if u == 0 || u > n || v == 0 || v > n {
                        return Err(ParseError::new(
                            lineno,
                            format!("edge ({u}, {v}) outside 1..={n}"),
                        ));
                    }
                    if u != v {
                        adj[u - 1].insert(v - 1);
                        adj[v - 1].insert(u - 1);
                    }
                }
                other => {
                    return Err(ParseError::new(
                        lineno,
                        format!("unrecognized line type {other:?}"),
                    ));
                }
            }
        }
        let adj = adj.ok_or_else(|| ParseError::new(0, "missing problem line"))?;
        let labels = (1..=n).collect();
        Ok(BitGraph::from_adjacency(adj, Some(labels)))
    }

    pub fn from_dimacs_str(text: &str) -> Result<Self, ParseError> {
        BitGraph::from_dimacs(text.as_bytes())
    }

    /// Parse a whitespace-separated edge list, one `u v` pair per line.
    /// `#` starts a comment. `base` declares whether vertex ids start at 0
    /// or 1; the vertex count is inferred from the largest id seen.
    pub fn from_edge_list(reader: impl BufRead, base: IndexBase) -> Result<Self, ParseError> {
        let mut edges = Vec::new();
        let mut max_id = None::<usize>;
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| ParseError::new(lineno, format!("read failed: {e}")))?;
            let body = line.split('#').next().unwrap_or("");
            let mut tokens = body.split_whitespace();
            let Some(first) = tokens.next() else { continue };
            let u: usize = first
                .parse()
                .map_err(|_| ParseError::new(lineno, format!("bad vertex id {first:?}")))?;
            let second = tokens
                .next()
                .ok_or_else(|| ParseError::new(lineno, "missing second endpoint"))?;
            let v: usize = second
                .parse()
                .map_err(|_| ParseError::new(lineno, format!("bad vertex id {second:?}")))?;
            if tokens.next().is_some() {
                return Err(ParseError::new(lineno, "trailing tokens after edge"));
            }
            if base == IndexBase::One && (u == 0 || v == 0) {
                return Err(ParseError::new(lineno, "vertex id 0 in 1-indexed input"));
            }
            max_id = Some(max_id.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        let Some(max_id) = max_id else {
            return Err(ParseError::new(0, "no edges in input"));
        };
        let (n, offset) = match base {
            IndexBase::Zero => (max_id + 1, 0),
            IndexBase::One => (max_id, 1),
        };
        let mut adj = vec![BitSet::new(n); n];
        for (u, v) in edges {
            if u != v {
                adj[u - offset].insert(v - offset);
                adj[v - offset].insert(u - offset);
            }
        }
        let labels = match base {
            IndexBase::Zero => None,
            IndexBase::One => Some((1..=n).collect()),
        };
        Ok(BitGraph::from_adjacency(adj, labels))
    }

    /// Write DIMACS `p edge` text with 1-indexed endpoints, each edge once.
    pub fn write_dimacs(&self, mut w: impl Write) -> io::Result<()> {
        writeln!(w, "p edge {} {}", self.n, self.m)?;
        for u in 0..self.n {
            for v in self.adj[u].ones() {
                if v > u {
                    writeln!(w, "e {} {}", u + 1, v + 1)?;
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Edge density `m / (n choose 2)`; zero for graphs under two vertices.
    pub fn density(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            self.m as f64 / (self.n as f64 * (self.n as f64 - 1.0) / 2.0)
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    /// Non-neighbors of `v`, excluding `v` itself.
    #[inline]
    pub fn non_neighbors(&self, v: usize) -> &BitSet {
        &self.comp[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// External labels, if the graph carries any (file inputs keep their
    /// original ids; generated graphs do not).
    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// External label of `v`: the carried label, or `v` itself.
    #[inline]
    pub fn label(&self, v: usize) -> usize {
        match &self.labels {
            Some(l) => l[v],
            None => v,
        }
    }

    /// Replace the label table. Panics if the length differs from `n`.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), self.n, "label table length must equal n");
        self.labels = Some(labels);
        self
    }

    /// Relabeled copy: vertex `v` of `self` becomes `ord.position_of(v)`.
    /// Edges are carried across the renaming and external labels follow
    /// their vertices; a graph without a label table acquires its original
    /// indices as labels. Renumbering therefore never changes the identity
    /// under which a vertex is reported.
    pub fn apply_permutation(&self, ord: &VertexOrdering) -> Self {
        assert_eq!(ord.n(), self.n, "ordering length must equal n");
        let mut adj = vec![BitSet::new(self.n); self.n];
        for u in 0..self.n {
            let nu = ord.position_of(u);
            for v in self.adj[u].ones() {
                adj[nu].insert(ord.position_of(v));
            }
        }
        let labels = (0..self.n)
            .map(|pos| self.label(ord.vertex_at(pos)))
            .collect();
        BitGraph::from_adjacency(adj, Some(labels))
    }
}

impl fmt::Debug for BitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BitGraph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish()
    }
}

/// Whether an edge-list file numbers vertices from 0 or from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    One,
}

/// Input rejected by a reader; `line` is 1-indexed (0 for end-of-input
/// conditions such as a missing problem line).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "parse error: {}", self.message)
        } else {
            write!(f, "parse error at line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_count(token: Option<&str>, lineno: usize, what: &str) -> Result<usize, ParseError> {
    let token = token.ok_or_else(|| ParseError::new(lineno, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| ParseError::new(lineno, format!("bad {what} {token:?}")))
}
