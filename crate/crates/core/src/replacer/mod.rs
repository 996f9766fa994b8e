//! Protrusion discovery and replacement.
//!
//! A protrusion is a connected vertex set `X` with small boundary `N(X)` whose
//! boundaried subgraph has small treewidth. Its behavior is summarized by a
//! [`Signature`]: constrained optima after gluing every small test graph and
//! fixing every boundary deletion profile. Two boundaried graphs with equal
//! normalized signatures are interchangeable up to the offset difference, so
//! the protrusion can be swapped for the smallest candidate in its class.

mod lift;
mod protrusion;
mod replace;
mod signature;
mod table;

pub use lift::{lift_solution, lift_through};
pub use protrusion::{find_protrusion, find_protrusions, Protrusion};
pub use replace::{replace_fast, replace_naive, LiftEntry, ReplacementTrace, Variant};
pub use signature::{build_test_set, signature_of, SigEntry, Signature};
pub use table::{build_table, parse_table, write_table, RepresentativeTable, TableClass};

use crate::error::{Error, Result};
use crate::family::MinorFamily;

/// Cap on the size of any enumerated set of boundaried graphs.
pub const ENUMERATION_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProtrusionParams {
    /// Maximum boundary size and maximum width of the certificate.
    pub r: usize,
    /// Smallest interior worth replacing.
    pub min_size: usize,
    /// Largest interior considered; keeps signature computation tractable.
    pub max_interior: usize,
    /// Vertex cap `s` for test boundaried graphs.
    pub test_size: usize,
    /// Vertex cap for representative candidates.
    pub rep_size: usize,
    /// Maximum number of separator candidates examined per search.
    pub separator_budget: u64,
}

impl ProtrusionParams {
    /// Defaults: `r = 2(eta + 1)`, `rep_size = 3`, `min_size = 2 * rep_size`.
    pub fn for_family(f: &MinorFamily) -> Self {
        let rep_size = 3;
        ProtrusionParams {
            r: 2 * (f.eta() + 1),
            min_size: 2 * rep_size,
            max_interior: 10,
            test_size: 4,
            rep_size,
            separator_budget: 2_000_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        if self.test_size < 1 || self.rep_size < 1 {
            return Err(Error::InvalidParams("size caps must be at least 1".into()));
        }
        if self.min_size <= self.rep_size {
            return Err(Error::InvalidParams(format!(
                "min_size {} must exceed rep_size {}",
                self.min_size, self.rep_size
            )));
        }
        if self.max_interior < self.min_size {
            return Err(Error::InvalidParams("max_interior below min_size".into()));
        }
        Ok(())
    }
}
