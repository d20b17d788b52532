use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fracdiff_core::specfun::{k_erfc, levy, ml, mw};

fn mittag_leffler(c: &mut Criterion) {
    let mut g = c.benchmark_group("mittag_leffler");
    // series, asymptotic and contour branches
    for &(nu, z) in &[(0.5, -1.0), (0.5, -30.0), (0.9, -8.0), (1.5, -12.0)] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("nu={nu},z={z}")),
            &(nu, z),
            |b, &(nu, z)| b.iter(|| ml(black_box(nu), black_box(z))),
        );
    }
    g.finish();
}

fn m_wright(c: &mut Criterion) {
    let mut g = c.benchmark_group("m_wright");
    for &(nu, z) in &[(0.25, 0.5), (0.25, 12.0), (0.75, 1.0), (0.75, 6.0)] {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("nu={nu},z={z}")),
            &(nu, z),
            |b, &(nu, z)| b.iter(|| mw(black_box(nu), black_box(z))),
        );
    }
    g.finish();
}

fn erfc_and_levy(c: &mut Criterion) {
    c.bench_function("k_erfc nu=0.375 z=2", |b| {
        b.iter(|| k_erfc(black_box(0.375), black_box(2.0)))
    });
    c.bench_function("levy 2mu=1.5 x=0.7", |b| {
        b.iter(|| levy(black_box(1.5), black_box(0.7)))
    });
    c.bench_function("levy 2mu=0.5 x=4", |b| b.iter(|| levy(black_box(0.5), black_box(4.0))));
}

criterion_group!(benches, mittag_leffler, m_wright, erfc_and_levy);
criterion_main!(benches);
