use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::CanonKey;
use crate::error::{Error, Result};
use crate::family::MinorFamily;
use crate::graph::Graph;
use crate::replacer::{
    build_table, find_protrusions, replace_fast, replace_naive, ProtrusionParams, ReplacementTrace,
    RepresentativeTable, Variant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelMode {
    Naive,
    #[default]
    Fast,
}

/// Representative tables by boundary size, built on first use.
#[derive(Debug, Clone, Default)]
pub struct TableCache {
    tables: BTreeMap<usize, RepresentativeTable>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Preloads a table; it replaces any table with the same `t`.
    pub fn insert(&mut self, table: RepresentativeTable) {
        self.tables.insert(table.t, table);
    }

    pub fn get_or_build(&mut self, t: usize, f: &MinorFamily, p: &ProtrusionParams) -> Result<&RepresentativeTable> {
        if !self.tables.contains_key(&t) {
            let table = build_table(t, f, p)?;
            log::debug!("built table t={t}: {} classes", table.len());
            self.tables.insert(t, table);
        }
        Ok(&self.tables[&t])
    }

    pub fn tables(&self) -> impl Iterator<Item = &RepresentativeTable> {
        self.tables.values()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundStat {
    pub variant: Variant,
    pub t: usize,
    /// Net vertex reduction of the round.
    pub removed: usize,
    pub delta: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelStats {
    pub rounds: Vec<RoundStat>,
    /// Protrusions skipped because no strictly smaller representative exists.
    pub skipped: usize,
    /// Fast-mode lookups that missed a table built with other caps and were
    /// redone naively.
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelResult {
    pub kernel: Graph,
    /// In application order; lift in reverse.
    pub traces: Vec<ReplacementTrace>,
    pub total_offset: i64,
    pub stats: KernelStats,
}

/// A failure part way through; `partial` holds every replacement completed
/// so far and is itself a sound kernel.
#[derive(Debug, Clone)]
pub struct KernelError {
    pub error: Error,
    pub partial: Box<KernelResult>,
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (after {} replacements)", self.error, self.partial.traces.len())
    }
}

impl std::error::Error for KernelError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

pub fn kernelize(
    g: &Graph,
    f: &MinorFamily,
    p: &ProtrusionParams,
    mode: KernelMode,
) -> std::result::Result<KernelResult, KernelError> {
    kernelize_with(g, f, p, mode, &mut TableCache::new())
}

/// Replaces protrusions until none with a strictly smaller representative
/// remains. Fast mode draws tables from `tables`, building missing ones.
pub fn kernelize_with(
    g: &Graph,
    f: &MinorFamily,
    p: &ProtrusionParams,
    mode: KernelMode,
    tables: &mut TableCache,
) -> std::result::Result<KernelResult, KernelError> {
    let mut res = KernelResult {
        kernel: g.clone(),
        traces: Vec::new(),
        total_offset: 0,
        stats: KernelStats::default(),
    };
    if let Err(error) = p.validate() {
        return Err(KernelError { error, partial: Box::new(res) });
    }
    let mut hopeless: BTreeSet<CanonKey> = BTreeSet::new();
    loop {
        match round(&res.kernel, f, p, mode, tables, &mut hopeless, &mut res.stats) {
            Ok(Some((next, trace))) => {
                res.stats.rounds.push(RoundStat {
                    variant: trace.variant,
                    t: trace.boundary.len(),
                    removed: res.kernel.n() - next.n(),
                    delta: trace.delta,
                });
                log::debug!("round {}: n {} -> {}, delta {}", res.traces.len() + 1, res.kernel.n(), next.n(), trace.delta);
                res.total_offset += trace.delta;
                res.kernel = next;
                res.traces.push(trace);
            }
            Ok(None) => return Ok(res),
            Err(error) => return Err(KernelError { error, partial: Box::new(res) }),
        }
    }
}

fn round(
    g: &Graph,
    f: &MinorFamily,
    p: &ProtrusionParams,
    mode: KernelMode,
    tables: &mut TableCache,
    hopeless: &mut BTreeSet<CanonKey>,
    stats: &mut KernelStats,
) -> Result<Option<(Graph, ReplacementTrace)>> {
    for pr in find_protrusions(g, p)? {
        // Representatives contain the whole boundary.
        if pr.t() > p.rep_size {
            continue;
        }
        let key = pr.boundaried(g).canonical_key();
        if hopeless.contains(&key) {
            continue;
        }
        let attempt = match mode {
            KernelMode::Naive => replace_naive(g, &pr, f, p),
            KernelMode::Fast => {
                let table = tables.get_or_build(pr.t(), f, p)?;
                let same_caps = table.test_size == p.test_size && table.rep_size == p.rep_size;
                match replace_fast(g, &pr, table, f) {
                    // The table holds every candidate naive would try.
                    Err(Error::SignatureMiss) if same_caps => Err(Error::NoRepresentative),
                    Err(Error::SignatureMiss) => {
                        stats.fallbacks += 1;
                        replace_naive(g, &pr, f, p)
                    }
                    other => other,
                }
            }
        };
        match attempt {
            Ok(done) => return Ok(Some(done)),
            Err(Error::NoShrinkage | Error::NoRepresentative) => {
                stats.skipped += 1;
                hopeless.insert(key);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
