//! Brute-force F-Deletion: subsets by size, then lexicographically.
//!
//! Everything else in the crate is checked against this module, so it stays
//! deliberately plain.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::boundaried::BoundariedGraph;
use crate::error::{Error, Result};
use crate::family::{is_f_minor_free, MinorFamily};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub opt: usize,
    /// Sorted deletion set of size `opt`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 16, max_subsets: 1 << 20 }
    }
}

impl OracleBudget {
    pub fn unlimited() -> Self {
        OracleBudget { max_vertices: 64, max_subsets: u64::MAX }
    }
}

thread_local! {
    static CALLS: Cell<u64> = const { Cell::new(0) };
    static GROUPING: Cell<u64> = const { Cell::new(0) };
}

/// Per-thread instrumentation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleCounters {
    /// Invocations of `opt_deletion` / `constrained_opt`.
    pub calls: u64,
    /// Signature computations for representative candidates.
    pub grouping: u64,
}

pub fn counters() -> OracleCounters {
    OracleCounters {
        calls: CALLS.with(Cell::get),
        grouping: GROUPING.with(Cell::get),
    }
}

pub fn reset_counters() {
    CALLS.with(|c| c.set(0));
    GROUPING.with(|c| c.set(0));
}

pub(crate) fn count_grouping() {
    GROUPING.with(|c| c.set(c.get() + 1));
}

/// Minimum deletion set of size at most `cap` (unbounded when `None`).
pub fn opt_deletion(g: &Graph, f: &MinorFamily, cap: Option<usize>) -> Result<Option<SolveResult>> {
    opt_deletion_with(g, f, cap, &OracleBudget::default())
}

pub fn opt_deletion_with(
    g: &Graph,
    f: &MinorFamily,
    cap: Option<usize>,
    budget: &OracleBudget,
) -> Result<Option<SolveResult>> {
    CALLS.with(|c| c.set(c.get() + 1));
    let free: Vec<usize> = (0..g.n()).collect();
    search(g, f, &[], &free, cap, budget)
}

/// Minimum deletion set of `b.graph` containing `forced_deleted` and avoiding
/// `forced_kept` (both subsets of the boundary), residual checked standalone.
pub fn constrained_opt(
    b: &BoundariedGraph,
    f: &MinorFamily,
    forced_deleted: &[usize],
    forced_kept: &[usize],
) -> Result<Option<SolveResult>> {
    constrained_opt_with(b, f, forced_deleted, forced_kept, None, &OracleBudget::default())
}

pub fn constrained_opt_with(
    b: &BoundariedGraph,
    f: &MinorFamily,
    forced_deleted: &[usize],
    forced_kept: &[usize],
    cap: Option<usize>,
    budget: &OracleBudget,
) -> Result<Option<SolveResult>> {
    CALLS.with(|c| c.set(c.get() + 1));
    let mut fixed = vec![false; b.n()];
    for &v in forced_deleted.iter().chain(forced_kept) {
        if !b.boundary.contains(&v) {
            return Err(Error::InvalidBoundary(format!("forced vertex {v} is not on the boundary")));
        }
        if fixed[v] {
            return Err(Error::InvalidBoundary(format!("vertex {v} forced twice")));
        }
        fixed[v] = true;
    }
    let free: Vec<usize> = (0..b.n()).filter(|&v| !fixed[v]).collect();
    let mut base = forced_deleted.to_vec();
    base.sort_unstable();
    search(&b.graph, f, &base, &free, cap, budget)
}

fn search(
    g: &Graph,
    f: &MinorFamily,
    base: &[usize],
    free: &[usize],
    cap: Option<usize>,
    budget: &OracleBudget,
) -> Result<Option<SolveResult>> {
    if g.n() > budget.max_vertices {
        return Err(Error::Resource { what: "oracle vertex count", limit: budget.max_vertices as u64 });
    }
    let max_extra = match cap {
        Some(c) if c < base.len() => return Ok(None),
        Some(c) => (c - base.len()).min(free.len()),
        None => free.len(),
    };
    let mut tried = 0u64;
    for k in 0..=max_extra {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            tried += 1;
            if tried > budget.max_subsets {
                return Err(Error::Resource { what: "oracle subsets", limit: budget.max_subsets });
            }
            let mut del: Vec<usize> = base.iter().copied().chain(idx.iter().map(|&i| free[i])).collect();
            let (rest, _) = g.remove_vertices(&del);
            if is_f_minor_free(&rest, f)? {
                del.sort_unstable();
                return Ok(Some(SolveResult { opt: del.len(), witness: del }));
            }
            if !next_combination(&mut idx, free.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
