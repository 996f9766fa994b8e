//! F-Deletion toolkit for minor-closed families containing a planar graph.
//!
//! The crate provides exact brute-force solving, protrusion discovery and
//! replacement (naive and table-driven), lossless kernelization with solution
//! lifting, a model-hitting approximation, and an exact branching solver.

pub mod boundaried;
pub mod canon;
pub mod error;
pub mod family;
pub mod generators;
pub mod graph;
pub mod minor;
pub mod oracle;
pub mod pipeline;
pub mod replacer;
pub mod treewidth;

pub use boundaried::{glue, BoundariedGraph};
pub use error::{Error, Result};
pub use family::{is_f_minor_free, validate_family, MinorFamily, Preset};
pub use graph::{parse_graph, write_graph, Graph};
pub use minor::{has_minor, is_planar, MinorModel};
pub use oracle::{constrained_opt, opt_deletion, SolveResult};
pub use treewidth::{
    exact_treewidth, greedy_decomposition, make_nice, validate_decomposition, NiceTreeDecomposition,
    TreeDecomposition,
};
pub use pipeline::{approximate, find_minimal_minor_model, kernelize, solve, KernelMode, KernelResult, Provenance, Solution};
pub use replacer::{
    build_table, find_protrusion, lift_solution, replace_fast, replace_naive, ProtrusionParams, ReplacementTrace,
    RepresentativeTable, write_table,
};
