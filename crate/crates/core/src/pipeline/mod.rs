//! End-to-end algorithms built on the replacer: kernelization with lifting,
//! a model-hitting approximation, and an exact kernelize-then-branch solver.

mod approx;
mod kernel;
mod model;
mod solve;

pub use approx::approximate;
pub use kernel::{kernelize, kernelize_with, KernelError, KernelMode, KernelResult, KernelStats, RoundStat, TableCache};
pub use model::find_minimal_minor_model;
pub use solve::{solve, solve_with, SolveOptions};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Solver,
    Approx,
    Lifted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    /// Sorted deletion set.
    pub set: Vec<usize>,
    /// Set only after `g - set` was checked to be F-minor-free.
    pub feasible: bool,
    pub provenance: Provenance,
}
