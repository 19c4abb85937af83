//! Vertex orderings and the renumbering step used by the greedy-pivot
//! strategies.
//!
//! The greedy pivot rules rely on vertex numbers carrying degree
//! information: after renumbering by max-degree-first order, "first set bit"
//! scans favor high-degree vertices. [`prepare`] performs that renumbering.

use std::fmt;

use crate::graph::BitGraph;

/// A permutation of `0..n`, stored in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// Identity ordering on `n` vertices.
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    /// Build from `order`, where `order[i]` is the vertex at position `i`.
    ///
    /// Panics unless `order` is a permutation of `0..order.len()`.
    pub fn from_order(order: Vec<usize>) -> Self {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            assert!(v < n, "vertex {v} out of range for n = {n}");
            assert!(position[v] == usize::MAX, "vertex {v} repeated");
            position[v] = i;
        }
        VertexOrdering { order, position }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Vertex occupying position `pos`.
    #[inline]
    pub fn vertex_at(&self, pos: usize) -> usize {
        self.order[pos]
    }

    /// Position of vertex `v`.
    #[inline]
    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Same ordering traversed back to front.
    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrdering::from_order(order)
    }

    /// One-line rendering through a graph's external labels.
    pub fn display_with(&self, g: &BitGraph) -> String {
        let parts: Vec<String> = self.order.iter().map(|&v| g.label(v).to_string()).collect();
        parts.join(" ")
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &v in &self.order {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Max-degree-first degenerate ordering: repeatedly take the vertex of
/// largest degree in the remaining induced subgraph. Ties break toward the
/// smallest vertex index.
pub fn max_degree_first(g: &BitGraph) -> VertexOrdering {
    greedy_by_residual_degree(g, true).0
}

/// Degeneracy ordering (repeatedly take the minimum-degree vertex, smallest
/// index on ties) and the graph's degeneracy: the largest residual degree
/// seen at any removal.
pub fn degeneracy(g: &BitGraph) -> (VertexOrdering, usize) {
    let (ord, worst) = greedy_by_residual_degree(g, false);
    (ord, worst)
}

fn greedy_by_residual_degree(g: &BitGraph, take_max: bool) -> (VertexOrdering, usize) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut worst_removal = 0;
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if removed[v] {
                continue;
            }
            let better = match best {
                usize::MAX => true,
                b if take_max => deg[v] > deg[b],
                b => deg[v] < deg[b],
            };
            if better {
                best = v;
            }
        }
        removed[best] = true;
        worst_removal = worst_removal.max(deg[best]);
        for w in g.neighbors(best).ones() {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
        order.push(best);
    }
    (VertexOrdering::from_order(order), worst_removal)
}

/// Renumber `g` by max-degree-first order: the vertex removed first becomes
/// vertex 0 of the result, so ascending index scans visit vertices in
/// removal order. Returns the renumbered graph and the ordering applied.
pub fn prepare(g: &BitGraph) -> (BitGraph, VertexOrdering) {
    let ord = max_degree_first(g);
    (g.apply_permutation(&ord), ord)
}
