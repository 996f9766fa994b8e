#![allow(dead_code)]

use fdel_core::generators::*;
use fdel_core::oracle::{opt_deletion_with, OracleBudget};
use fdel_core::replacer::ProtrusionParams;
use fdel_core::{Graph, MinorFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small protrusions only: boundary and width 2, interiors of exactly three.
pub fn small_params() -> ProtrusionParams {
    ProtrusionParams {
        r: 2,
        min_size: 3,
        max_interior: 3,
        test_size: 4,
        rep_size: 2,
        separator_budget: 2_000_000,
    }
}

pub fn opt(g: &Graph, f: &MinorFamily) -> usize {
    let budget = OracleBudget { max_vertices: 24, max_subsets: u64::MAX };
    opt_deletion_with(g, f, None, &budget).unwrap().unwrap().opt
}

/// Random tree with `hangs` pendant triangles, each joined by one edge.
pub fn tree_with_triangles(n: usize, hangs: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut g = random_tree(n, &mut r);
    for _ in 0..hangs {
        let at = r.gen_range(0..g.n());
        let a = g.add_vertex();
        let b = g.add_vertex();
        let c = g.add_vertex();
        g.add_edge(at, a);
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
    }
    g
}

/// Fixed instance corpus, at most 20 vertices each.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for k in 2..=6 {
        out.push((format!("triangles_on_path({k})"), triangles_on_path(k)));
    }
    for k in 2..=4 {
        out.push((format!("pendant_triangle_chain({k})"), pendant_triangle_chain(k)));
    }
    for (rows, cols, tree) in [(2, 3, 5), (3, 3, 6), (2, 4, 8)] {
        let g = grid_with_pendant_tree(rows, cols, tree, &mut rng(rows as u64 * 10 + cols as u64));
        out.push((format!("grid_with_pendant_tree({rows},{cols},{tree})"), g));
    }
    out.push(("cycle(5)+path(6)".into(), attach_tree(&cycle(5), 0, &path(6))));
    out.push(("k4+path(5)".into(), attach_tree(&complete(4), 0, &path(5))));
    for seed in 0..6 {
        out.push((format!("tree_with_triangles(8,2,{seed})"), tree_with_triangles(8, 2, seed)));
        out.push((format!("gnp(10,0.25,{seed})"), gnp(10, 0.25, &mut rng(100 + seed))));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("k5".into(), complete(5)));
    out.push(("disjoint_triangles(4)".into(), disjoint_triangles(4)));
    out
}
