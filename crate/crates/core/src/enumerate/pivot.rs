//! Pivot selection and branch-set construction.
//!
//! Scored rules maximize |P ∩ N(p)|, ties toward the smaller index. The
//! scan works on complement rows: minimizing the number of non-neighbors
//! in P is the same maximization, and it admits an early exit the moment a
//! candidate's running count reaches the best found so far. Complement
//! rows exclude the diagonal, so a candidate inside P starts its count at
//! one (it is its own non-neighbor for this purpose); without that
//! correction the early-exit scan could prefer a P-member whose true score
//! ties a better X-member.

use crate::bitset::BitSet;
use crate::graph::BitGraph;

/// How the engine picks a pivot at each internal node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PivotRule {
    /// No pivot: branch on all of P.
    None,
    /// Score every vertex of P ∪ X.
    ScoredUnion { early_exit: bool },
    /// First vertex of X, else first vertex of P. One bit scan, no scoring.
    FirstOfXElseP,
    /// Score every vertex of X; first vertex of P when X is empty.
    ScoredXElseFirstP { early_exit: bool },
}

/// The candidate in `candidates` maximizing |P ∩ N(c)|, smallest index on
/// ties. `scans` grows by one per candidate examined.
pub(crate) fn scored_pivot(
    p: &BitSet,
    candidates: &BitSet,
    early_exit: bool,
    g: &BitGraph,
    scans: &mut u64,
) -> usize {
    debug_assert!(!candidates.is_empty(), "no pivot candidates");
    if early_exit {
        let mut best = usize::MAX;
        let mut best_cost = usize::MAX;
        for c in candidates.ones() {
            *scans += 1;
            let mut cost = p.contains(c) as usize;
            for (pw, kw) in p.words().iter().zip(g.non_neighbors(c).words()) {
                cost += (pw & kw).count_ones() as usize;
                if cost >= best_cost {
                    break;
                }
            }
            if cost < best_cost {
                best_cost = cost;
                best = c;
            }
        }
        best
    } else {
        let mut best = usize::MAX;
        let mut best_score = 0;
        for c in candidates.ones() {
            *scans += 1;
            let score = p.count_and(g.neighbors(c));
            if best == usize::MAX || score > best_score {
                best_score = score;
                best = c;
            }
        }
        best
    }
}

/// Tomita's rule: the vertex of `p | x` with the most neighbors in `p`.
///
/// Panics if both sets are empty.
pub fn pivot_tomita(p: &BitSet, x: &BitSet, g: &BitGraph) -> usize {
    let candidates = p.or(x);
    assert!(!candidates.is_empty(), "pivot requires a nonempty P ∪ X");
    scored_pivot(p, &candidates, false, g, &mut 0)
}

/// Naude's early-exit scan; returns a vertex scoring exactly as
/// [`pivot_tomita`]'s choice.
///
/// Panics if both sets are empty.
pub fn pivot_naude(p: &BitSet, x: &BitSet, g: &BitGraph) -> usize {
    let candidates = p.or(x);
    assert!(!candidates.is_empty(), "pivot requires a nonempty P ∪ X");
    scored_pivot(p, &candidates, true, g, &mut 0)
}

/// The greedy pivot family. All variants assume the graph was renumbered
/// so that index order is the max-degree-first order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyVariant {
    /// First vertex of X, else first vertex of P.
    Bb,
    /// Best-scoring vertex of X, else first vertex of P.
    BbTx,
    /// As `BbTx` with the early-exit scan.
    BbNx,
}

/// Pick a pivot per the greedy `variant`.
///
/// Panics if both sets are empty.
pub fn pivot_greedy(p: &BitSet, x: &BitSet, variant: GreedyVariant, g: &BitGraph) -> usize {
    assert!(
        !(p.is_empty() && x.is_empty()),
        "pivot requires a nonempty P ∪ X"
    );
    match variant {
        GreedyVariant::Bb => x.first().or_else(|| p.first()).unwrap(),
        GreedyVariant::BbTx | GreedyVariant::BbNx => {
            if x.is_empty() {
                p.first().unwrap()
            } else {
                scored_pivot(p, x, variant == GreedyVariant::BbNx, g, &mut 0)
            }
        }
    }
}

/// Branch set for pivot `p`: the candidates kept for expansion, `P` minus
/// the pivot's neighbors, plus the pivot itself when it lies in `P`.
pub fn branch_set(p: &BitSet, pivot: usize, g: &BitGraph) -> BitSet {
    let mut l = p.and(g.non_neighbors(pivot));
    if p.contains(pivot) {
        l.insert(pivot);
    }
    l
}
