//! Brute-force reference implementations used only for cross-checking.
//!
//! Everything here avoids the production code paths on purpose: adjacency
//! is re-derived through single-edge queries into plain `u32` masks, and
//! cliques are found by scanning all vertex subsets. Slow, obviously
//! correct, and capped at [`MAX_ORACLE_N`] vertices.

use std::fmt;

use crate::bitset::BitSet;
use crate::graph::BitGraph;

/// Largest graph the subset scan will accept.
pub const MAX_ORACLE_N: usize = 25;

/// Returned when a graph is too large for exhaustive checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooLarge {
    pub n: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph has {} vertices, oracle accepts at most {MAX_ORACLE_N}",
            self.n
        )
    }
}

impl std::error::Error for TooLarge {}

/// Enumerate all maximal cliques by scanning every nonempty vertex subset.
/// Cliques come back canonicalized: external labels, each clique sorted
/// ascending, cliques in lexicographic order.
pub fn maximal_cliques(g: &BitGraph) -> Result<Vec<Vec<usize>>, TooLarge> {
    let n = g.n();
    if n > MAX_ORACLE_N {
        return Err(TooLarge { n });
    }
    let mut adj = vec![0u32; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && g.has_edge(u, v) {
                *row |= 1 << v;
            }
        }
    }
    let mut found = Vec::new();
    for subset in 1u32..(1u32 << n) {
        if is_clique(subset, &adj) && is_maximal(subset, &adj, n) {
            let members = (0..n)
                .filter(|&v| subset >> v & 1 != 0)
                .map(|v| g.label(v))
                .collect();
            found.push(members);
        }
    }
    Ok(canonicalize(found))
}

fn is_clique(subset: u32, adj: &[u32]) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Every other member must be a neighbor of v.
        if subset & !(adj[v] | 1 << v) != 0 {
            return false;
        }
    }
    true
}

fn is_maximal(subset: u32, adj: &[u32], n: usize) -> bool {
    for (w, &row) in adj.iter().enumerate().take(n) {
        if subset >> w & 1 == 0 && subset & row == subset {
            return false;
        }
    }
    true
}

/// Sort members of each clique, then the cliques themselves.
pub fn canonicalize(mut cliques: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    cliques
}

/// Best pivot score over all candidates in `p | x`: the largest number of
/// candidates in `p` adjacent to a single candidate. Computed by explicit
/// iteration and per-edge queries, independent of the word-level scoring
/// in the enumeration engine.
pub fn best_pivot_score(p: &BitSet, x: &BitSet, g: &BitGraph) -> usize {
    let mut best = 0;
    for c in p.ones().chain(x.ones()) {
        let score = p.ones().filter(|&w| g.has_edge(c, w)).count();
        best = best.max(score);
    }
    best
}
