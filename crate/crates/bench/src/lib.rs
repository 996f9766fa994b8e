//! Instances and parameters shared by the benchmarks in `benches/`.

use fdel_core::generators::{pendant_triangle_chain, triangles_on_path};
use fdel_core::replacer::ProtrusionParams;
use fdel_core::Graph;

pub fn chain_params() -> ProtrusionParams {
    ProtrusionParams {
        r: 2,
        min_size: 3,
        max_interior: 3,
        test_size: 4,
        rep_size: 2,
        separator_budget: 2_000_000,
    }
}

/// Pendant-triangle chains, the family whose kernels grow linearly in `k`.
pub fn chains(ks: impl IntoIterator<Item = usize>) -> Vec<(usize, Graph)> {
    ks.into_iter().map(|k| (k, pendant_triangle_chain(k))).collect()
}

pub fn path_triangles(ks: impl IntoIterator<Item = usize>) -> Vec<(usize, Graph)> {
    ks.into_iter().map(|k| (k, triangles_on_path(k))).collect()
}
