use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pap_core::{enumerate_pap_triangles, enumerate_triangles, orbit_census};

fn full_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_scan");
    group.sample_size(10);
    for n in [8, 9, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_triangles(black_box(n), 4).unwrap())
        });
    }
    group.finish();
}

fn chunk_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("full_scan_n9_chunks");
    group.sample_size(10);
    for chunks in [1, 4, 16] {
        group.bench_with_input(
            BenchmarkId::from_parameter(chunks),
            &chunks,
            |b, &chunks| b.iter(|| enumerate_triangles(9, black_box(chunks)).unwrap()),
        );
    }
    group.finish();
}

fn pap_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("pap_scan");
    group.sample_size(10);
    for n in [10, 11, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_pap_triangles(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("orbit_census");
    group.sample_size(10);
    for (n, k) in [(8, 4), (10, 5), (12, 6)] {
        group.bench_with_input(
            BenchmarkId::new("n_k", format!("{n}_{k}")),
            &(n, k),
            |b, &(n, k)| b.iter(|| orbit_census(black_box(n), black_box(k)).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, full_scan, chunk_counts, pap_scan, census);
criterion_main!(benches);
