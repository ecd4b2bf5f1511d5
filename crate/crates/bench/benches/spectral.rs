use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rowing_spectra::spectral::{adjacency, charpoly, lambda1, lambda1_tail};
use rowing_spectra_bench::{rat, rowing, zero_tail};

fn inertia(c: &mut Criterion) {
    let mut group = c.benchmark_group("inertia");
    for n in [25, 50, 100, 200] {
        let a = adjacency(&zero_tail("F1", n)).shifted(&rat(-2019, 1000));
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| black_box(a.inertia()))
        });
    }
    group.finish();
}

fn smallest_eigenvalue(c: &mut Criterion) {
    let mut group = c.benchmark_group("lambda1");
    group.sample_size(20);
    for n in [10, 50, 100] {
        let g = zero_tail("F2", n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| lambda1(black_box(g), &rat(1, 1_000_000)).unwrap())
        });
    }
    group.finish();
}

fn tails(c: &mut Criterion) {
    let g = rowing("F1", "0110");
    c.bench_function("lambda1_tail F1:0110", |b| {
        b.iter(|| lambda1_tail(black_box(&g), &rat(1, 1_000_000)).unwrap())
    });
}

fn characteristic_polynomial(c: &mut Criterion) {
    let a = adjacency(&rowing("F3", "1111"));
    c.bench_function("charpoly F3:1111", |b| {
        b.iter(|| charpoly(black_box(&a)).unwrap())
    });
}

criterion_group!(
    benches,
    inertia,
    smallest_eigenvalue,
    tails,
    characteristic_polynomial
);
criterion_main!(benches);
