//! Destinations for reported cliques.
//!
//! Benchmark-scale graphs can hold hundreds of millions of maximal
//! cliques, so the engine never materializes them unless the sink asks:
//! `WANTS_CLIQUES = false` lets a counting run skip label mapping and
//! sorting entirely.

use std::io::{self, Write};

/// Receives maximal cliques as sorted slices of external labels.
pub trait CliqueSink {
    /// When false, the engine only counts; `report` is never called.
    const WANTS_CLIQUES: bool = true;

    fn report(&mut self, clique: &[usize]) -> io::Result<()>;
}

/// Counts only; the engine's counters carry the result.
pub struct CountSink;

impl CliqueSink for CountSink {
    const WANTS_CLIQUES: bool = false;

    fn report(&mut self, _clique: &[usize]) -> io::Result<()> {
        Ok(())
    }
}

/// Stores every clique. For tests and small graphs.
#[derive(Default)]
pub struct CollectSink {
    pub cliques: Vec<Vec<usize>>,
}

impl CollectSink {
    pub fn new() -> Self {
        CollectSink::default()
    }
}

impl CliqueSink for CollectSink {
    fn report(&mut self, clique: &[usize]) -> io::Result<()> {
        self.cliques.push(clique.to_vec());
        Ok(())
    }
}

/// Writes one clique per line: labels ascending, space-separated.
pub struct StreamSink<W: Write> {
    writer: W,
}

impl<W: Write> StreamSink<W> {
    pub fn new(writer: W) -> Self {
        StreamSink { writer }
    }

    pub fn into_inner(self) -> W {
        self.writer
    }
}

impl<W: Write> CliqueSink for StreamSink<W> {
    fn report(&mut self, clique: &[usize]) -> io::Result<()> {
        let mut first = true;
        for v in clique {
            if !first {
                self.writer.write_all(b" ")?;
            }
            write!(self.writer, "{v}")?;
            first = false;
        }
        self.writer.write_all(b"\n")
    }
}
