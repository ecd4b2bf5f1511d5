use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rowing_spectra::densearch::{find_caterpillar, find_three_colorable};
use rowing_spectra::papercerts::{cert_lemma_4_1, cert_prop_4_6};
use rowing_spectra::SearchConfig;
use rowing_spectra_bench::rat;

fn witnesses(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let cfg = SearchConfig::default();
    for (p, q) in [(407, 200), (411, 200)] {
        group.bench_function(format!("three-colorable {p}/{q}"), |b| {
            b.iter(|| find_three_colorable(black_box(&rat(p, q)), &rat(1, 100), &cfg).unwrap())
        });
    }
    group.bench_function("caterpillar 5/2", |b| {
        b.iter(|| find_caterpillar(black_box(&rat(5, 2)), &rat(1, 100), &cfg).unwrap())
    });
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("certs");
    group.sample_size(10);
    group.bench_function("alpha-beta identities", |b| b.iter(cert_lemma_4_1));
    group.bench_function("quotients and determinants", |b| b.iter(cert_prop_4_6));
    group.finish();
}

criterion_group!(benches, witnesses, certificates);
criterion_main!(benches);
