use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fdel_bench::{chain_params, chains, path_triangles};
use fdel_core::generators::{grid, petersen};
use fdel_core::pipeline::{kernelize, solve_with, KernelMode, SolveOptions, TableCache};
use fdel_core::replacer::build_table;
use fdel_core::{exact_treewidth, has_minor, Preset};

fn minors(c: &mut Criterion) {
    let mut group = c.benchmark_group("minor");
    let k4 = fdel_core::generators::complete(4);
    let k5 = fdel_core::generators::complete(5);
    group.bench_function("petersen_has_k4", |b| b.iter(|| has_minor(&petersen(), &k4).unwrap()));
    group.bench_function("grid4x4_has_k5", |b| b.iter(|| has_minor(&grid(4, 4), &k5).unwrap()));
    group.finish();
}

fn treewidth(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_treewidth");
    for (name, g) in [("petersen", petersen()), ("grid4x4", grid(4, 4))] {
        group.bench_function(name, |b| b.iter(|| exact_treewidth(&g, g.n()).unwrap()));
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let fvs = Preset::FeedbackVertexSet.family();
    let p = chain_params();
    let mut group = c.benchmark_group("build_table");
    for t in 0..=2 {
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| b.iter(|| build_table(t, &fvs, &p).unwrap()));
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let fvs = Preset::FeedbackVertexSet.family();
    let p = chain_params();
    let mut group = c.benchmark_group("kernelize");
    group.sample_size(10);
    for (k, g) in path_triangles([3, 5]) {
        for (label, mode) in [("fast", KernelMode::Fast), ("naive", KernelMode::Naive)] {
            group.bench_with_input(BenchmarkId::new(label, k), &g, |b, g| b.iter(|| kernelize(g, &fvs, &p, mode).unwrap()));
        }
    }
    group.finish();
}

fn solving(c: &mut Criterion) {
    let fvs = Preset::FeedbackVertexSet.family();
    let p = chain_params();
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for (k, g) in chains([3, 4]) {
        for (label, kernel) in [("kernel", true), ("plain", false)] {
            let opts = SolveOptions { kernelize: kernel, ..Default::default() };
            group.bench_with_input(BenchmarkId::new(label, k), &g, |b, g| {
                b.iter(|| solve_with(g, &fvs, g.n(), &p, &opts, &mut TableCache::new()).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, minors, treewidth, tables, kernels, solving);
criterion_main!(benches);
