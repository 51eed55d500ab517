use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rtamari::harmonics::kernel_space;
use rtamari::nabla3::h3;
use rtamari::parking::all_parking;
use rtamari::tamari::{enumerate_paths, TamariPoset};
use rtamari::verify::{frob_p, interval_formula_check};

fn paths(c: &mut Criterion) {
    let mut g = c.benchmark_group("paths");
    for (n, r) in [(6, 1), (5, 2), (4, 3)] {
        g.bench_with_input(BenchmarkId::new("enumerate", format!("{n},{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| enumerate_paths(black_box(n), black_box(r)).len())
        });
    }
    g.bench_function("parking 4,2", |b| b.iter(|| all_parking(black_box(4), black_box(2)).len()));
    g.finish();
}

fn poset(c: &mut Criterion) {
    let mut g = c.benchmark_group("poset");
    for (n, r) in [(4, 1), (5, 1), (4, 2)] {
        g.bench_with_input(BenchmarkId::new("intervals", format!("{n},{r}")), &(n, r), |b, &(n, r)| {
            b.iter(|| TamariPoset::build(n, r).expect("valid size").interval_count())
        });
    }
    g.sample_size(10);
    g.bench_function("interval formula 5,2", |b| b.iter(|| interval_formula_check(5, 2, None).expect("runs").pass));
    g.finish();
}

fn symmetric(c: &mut Criterion) {
    let mut g = c.benchmark_group("symmetric");
    g.bench_function("frob_p 5,2", |b| b.iter(|| frob_p(black_box(5), black_box(2))));
    g.bench_function("h3 r=4", |b| b.iter(|| h3(black_box(4))));
    g.finish();
}

fn harmonics(c: &mut Criterion) {
    let mut g = c.benchmark_group("harmonics");
    g.sample_size(10);
    g.bench_function("kernel n=3", |b| b.iter(|| kernel_space(black_box(3)).expect("kernel").dim()));
    g.finish();
}

criterion_group!(benches, paths, poset, symmetric, harmonics);
criterion_main!(benches);
