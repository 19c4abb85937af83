//! Bit-parallel maximal clique enumeration.
//!
//! The crate enumerates all maximal cliques of an undirected graph with a
//! family of Bron-Kerbosch style algorithms. Vertex sets are represented as
//! bitstrings so that the set operations dominating the recursion (neighbor
//! intersection, pivot scoring, candidate scans) run one 64-bit word at a
//! time. Besides the classical pivot selections of Tomita and Naude, the
//! crate implements the greedy constant-time pivot family (GreedyBB and its
//! variants), which pairs a max-degree-first vertex renumbering with a
//! pivot rule that picks the first eligible vertex instead of scoring all
//! of them.
//!
//! Entry points:
//!
//! * [`graph::BitGraph`]: adjacency-matrix graph, readers and generators.
//! * [`enumerate::run`]: one enumeration under a chosen [`enumerate::Strategy`].
//! * [`oracle`]: brute-force reference for cross-checking on small graphs.

pub mod bitset;
pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod rng;
