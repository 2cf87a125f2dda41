//! Compares the rayon fan-out against plain sequential iteration on the two
//! heaviest inner loops: the Hom-vanishing sweep and the χ twist table.
//!
//! Run with `cargo bench -p bbw`.

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::prelude::*;

use bbw::pushforward;
use bbw::verify::{check_vanishing, direct_vanishing_claims};

fn bench_vanishing_sweep(c: &mut Criterion) {
    let claims = direct_vanishing_claims(6);
    let mut group = c.benchmark_group("vanishing_sweep_gr26");
    group.sample_size(10);
    group.bench_function("serial", |b| {
        b.iter(|| {
            claims
                .iter()
                .map(|claim| check_vanishing(claim).unwrap())
                .filter(|ok| *ok)
                .count()
        })
    });
    group.bench_function("rayon", |b| {
        b.iter(|| {
            claims
                .par_iter()
                .map(|claim| check_vanishing(claim).unwrap())
                .filter(|ok| *ok)
                .count()
        })
    });
    group.finish();
}

fn bench_chi_table(c: &mut Criterion) {
    let ts: Vec<i64> = (0..=17).collect();
    let mut group = c.benchmark_group("chi_table_ty7");
    group.sample_size(10);
    group.bench_function("serial", |b| {
        b.iter(|| {
            ts.iter()
                .map(|t| pushforward::chi(7, *t).unwrap())
                .collect::<Vec<_>>()
        })
    });
    group.bench_function("rayon", |b| {
        b.iter(|| {
            ts.par_iter()
                .map(|t| pushforward::chi(7, *t).unwrap())
                .collect::<Vec<_>>()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_vanishing_sweep, bench_chi_table);
criterion_main!(benches);
