//! The shared recursion.
//!
//! Per-depth scratch (P, X and the branch set L) lives in a preallocated
//! frame stack so the hot loop never allocates; R is a plain vector since
//! no whole-set operation ever touches it. Counters live on the engine and
//! are read off by the caller after the run.

use std::io;
use std::time::Instant;

use super::pivot::{scored_pivot, PivotRule};
use super::sink::CliqueSink;
use super::Observer;
use crate::bitset::BitSet;
use crate::graph::BitGraph;
use crate::ordering::VertexOrdering;

/// Why a run stopped early.
pub(crate) enum Abort {
    TimeLimit,
    Sink(io::Error),
}

/// Check the deadline once per this many steps.
const DEADLINE_STRIDE: u64 = 4096;

struct Frame {
    p: BitSet,
    x: BitSet,
    /// Branch set: the candidates actually expanded at this node.
    l: BitSet,
}

pub(crate) struct Engine<'g, 's, 'o, S: CliqueSink> {
    g: &'g BitGraph,
    rule: PivotRule,
    sink: &'s mut S,
    observer: Option<Observer<'o>>,
    deadline: Option<Instant>,
    check_invariants: bool,
    frames: Vec<Frame>,
    r: Vec<usize>,
    label_buf: Vec<usize>,
    union_buf: BitSet,
    pub steps: u64,
    pub cliques: u64,
    pub max_clique: usize,
    pub pivot_scans: u64,
}

impl<'g, 's, 'o, S: CliqueSink> Engine<'g, 's, 'o, S> {
    pub fn new(
        g: &'g BitGraph,
        rule: PivotRule,
        sink: &'s mut S,
        deadline: Option<Instant>,
        check_invariants: bool,
        observer: Option<Observer<'o>>,
    ) -> Self {
        let n = g.n();
        Engine {
            g,
            rule,
            sink,
            observer,
            deadline,
            check_invariants,
            frames: Vec::new(),
            r: Vec::with_capacity(n),
            label_buf: Vec::with_capacity(n),
            union_buf: BitSet::new(n),
            steps: 0,
            cliques: 0,
            max_clique: 0,
            pivot_scans: 0,
        }
    }

    /// Classical entry: P = all vertices, X = empty, R = empty.
    pub fn run_full(&mut self) -> Result<(), Abort> {
        let n = self.g.n();
        if n == 0 {
            return Ok(());
        }
        self.ensure_frame(0);
        self.frames[0].p = BitSet::full(n);
        self.frames[0].x.clear_all();
        self.node(0)
    }

    /// Ordering-driven entry: vertex `ord[i]` seeds a subproblem with its
    /// later neighbors as P and its earlier neighbors as X. Each maximal
    /// clique appears in exactly one subproblem, the one seeded by its
    /// earliest member.
    pub fn run_seeded(&mut self, ord: &VertexOrdering) -> Result<(), Abort> {
        let n = self.g.n();
        self.ensure_frame(0);
        let mut remaining = BitSet::full(n);
        let mut earlier = BitSet::new(n);
        for pos in 0..n {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Abort::TimeLimit);
                }
            }
            let v = ord.vertex_at(pos);
            remaining.remove(v);
            {
                let f = &mut self.frames[0];
                f.p.assign_and(&remaining, self.g.neighbors(v));
                f.x.assign_and(&earlier, self.g.neighbors(v));
            }
            self.r.push(v);
            let outcome = self.node(0);
            self.r.pop();
            outcome?;
            earlier.insert(v);
        }
        Ok(())
    }

    fn ensure_frame(&mut self, depth: usize) {
        while self.frames.len() <= depth {
            let n = self.g.n();
            self.frames.push(Frame {
                p: BitSet::new(n),
                x: BitSet::new(n),
                l: BitSet::new(n),
            });
        }
    }

    fn node(&mut self, depth: usize) -> Result<(), Abort> {
        self.steps += 1;
        if self.steps.is_multiple_of(DEADLINE_STRIDE) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Abort::TimeLimit);
                }
            }
        }
        if self.check_invariants {
            self.assert_bk_invariant(depth);
        } else {
            debug_assert!(self.frames[depth].p.is_disjoint(&self.frames[depth].x));
        }
        if self.frames[depth].p.is_empty() {
            if self.frames[depth].x.is_empty() {
                self.report()?;
            }
            return Ok(());
        }
        if let Some(obs) = self.observer.as_deref_mut() {
            let f = &self.frames[depth];
            obs(&f.p, &f.x, self.g);
        }
        self.fill_branch_set(depth);
        let mut from = 0;
        while let Some(v) = self.frames[depth].l.next_at(from) {
            from = v + 1;
            self.ensure_frame(depth + 1);
            {
                let (left, right) = self.frames.split_at_mut(depth + 1);
                let cur = &left[depth];
                let child = &mut right[0];
                child.p.assign_and(&cur.p, self.g.neighbors(v));
                child.x.assign_and(&cur.x, self.g.neighbors(v));
            }
            self.r.push(v);
            let outcome = self.node(depth + 1);
            self.r.pop();
            outcome?;
            let f = &mut self.frames[depth];
            f.p.remove(v);
            f.x.insert(v);
        }
        Ok(())
    }

    /// Compute L into the frame: all of P without a pivot, otherwise
    /// P minus the pivot's neighbors (plus the pivot itself if in P).
    fn fill_branch_set(&mut self, depth: usize) {
        let pivot = match self.rule {
            PivotRule::None => None,
            PivotRule::FirstOfXElseP => {
                let f = &self.frames[depth];
                Some(f.x.first().or_else(|| f.p.first()).expect("P nonempty"))
            }
            PivotRule::ScoredUnion { early_exit } => {
                let f = &self.frames[depth];
                self.union_buf.assign_or(&f.p, &f.x);
                Some(scored_pivot(
                    &f.p,
                    &self.union_buf,
                    early_exit,
                    self.g,
                    &mut self.pivot_scans,
                ))
            }
            PivotRule::ScoredXElseFirstP { early_exit } => {
                let f = &self.frames[depth];
                if f.x.is_empty() {
                    Some(f.p.first().expect("P nonempty"))
                } else {
                    Some(scored_pivot(
                        &f.p,
                        &f.x,
                        early_exit,
                        self.g,
                        &mut self.pivot_scans,
                    ))
                }
            }
        };
        let f = &mut self.frames[depth];
        match pivot {
            None => f.l.copy_from(&f.p),
            Some(p) => {
                f.l.assign_and(&f.p, self.g.non_neighbors(p));
                if f.p.contains(p) {
                    f.l.insert(p);
                }
            }
        }
    }

    fn report(&mut self) -> Result<(), Abort> {
        self.cliques += 1;
        self.max_clique = self.max_clique.max(self.r.len());
        if S::WANTS_CLIQUES {
            self.label_buf.clear();
            self.label_buf
                .extend(self.r.iter().map(|&v| self.g.label(v)));
            self.label_buf.sort_unstable();
            self.sink.report(&self.label_buf).map_err(Abort::Sink)?;
        }
        Ok(())
    }

    /// Full Bron-Kerbosch node invariant: R is a clique, P and X are
    /// disjoint, and for every vertex w outside R, membership in P ∪ X is
    /// equivalent to adjacency with all of R.
    fn assert_bk_invariant(&self, depth: usize) {
        let f = &self.frames[depth];
        assert!(f.p.is_disjoint(&f.x), "P and X overlap");
        for (i, &u) in self.r.iter().enumerate() {
            for &v in &self.r[i + 1..] {
                assert!(self.g.has_edge(u, v), "R not a clique: {u} !~ {v}");
            }
        }
        for w in 0..self.g.n() {
            if self.r.contains(&w) {
                assert!(!f.p.contains(w) && !f.x.contains(w));
                continue;
            }
            let adjacent_to_all = self.r.iter().all(|&u| self.g.has_edge(w, u));
            let in_px = f.p.contains(w) || f.x.contains(w);
            assert_eq!(
                in_px, adjacent_to_all,
                "vertex {w}: P∪X membership {in_px} vs common-neighborhood {adjacent_to_all}"
            );
        }
    }
}
