//! Per-run statistics and their CSV/JSON forms.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

/// Outcome of one enumeration run.
///
/// `elapsed_seconds` covers the recursion only; ordering construction and
/// renumbering are reported separately as `prep_seconds`. `pivot_scans`
/// counts candidates examined by scoring loops, which stays at zero for
/// greedybb (its pivot is a single bit scan). `partial` marks a record
/// captured when a time limit aborted the run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub strategy: String,
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub cliques: u64,
    pub steps: u64,
    pub max_clique: usize,
    pub elapsed_seconds: f64,
    pub prep_seconds: f64,
    pub pivot_scans: u64,
    pub partial: bool,
}

impl RunStats {
    /// The CSV column set, in serialization order.
    pub const CSV_HEADER: &'static str = "strategy,source,n,m,density,cliques,steps,max_clique,elapsed_seconds,prep_seconds,pivot_scans,partial";

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("RunStats serializes")
    }

    /// Single-line key=value rendering for terminals.
    pub fn human(&self) -> String {
        format!(
            "strategy={} source={} n={} m={} density={:.4} cliques={} steps={} \
             max_clique={} elapsed={:.6}s prep={:.6}s pivot_scans={} partial={}",
            self.strategy,
            if self.source.is_empty() {
                "-"
            } else {
                &self.source
            },
            self.n,
            self.m,
            self.density,
            self.cliques,
            self.steps,
            self.max_clique,
            self.elapsed_seconds,
            self.prep_seconds,
            self.pivot_scans,
            self.partial,
        )
    }
}

/// Write rows as CSV, header line first.
pub fn write_stats_csv<W: Write>(rows: &[RunStats], writer: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Read rows produced by [`write_stats_csv`].
pub fn read_stats_csv<R: Read>(reader: R) -> csv::Result<Vec<RunStats>> {
    csv::Reader::from_reader(reader).deserialize().collect()
}
