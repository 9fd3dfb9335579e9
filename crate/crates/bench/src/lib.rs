//! Criterion benchmarks for the core algorithms.

use std::hint::black_box;

use criterion::Criterion;
use fc_dyck_core::{dimension, enumerate_fc, phi, sweep, t_row, DyckPath, HeightGuard, Quiver};

pub fn benchmarks(c: &mut Criterion) {
    c.bench_function("enumerate_fc rank 7 length 8", |b| {
        b.iter(|| enumerate_fc(black_box(7), black_box(8)))
    });
    c.bench_function("t_row 40", |b| b.iter(|| t_row(black_box(40))));

    let paths: Vec<DyckPath> = (0..=9).flat_map(|k| enumerate_fc(6, k)).map(|c| phi(&c)).collect();
    c.bench_function("dimension of every rank-6 path", |b| {
        b.iter(|| {
            for d in &paths {
                black_box(dimension(d).unwrap());
            }
        })
    });

    let q = Quiver::forward(4);
    c.bench_function("relation sweep rank 4", |b| {
        b.iter(|| sweep(&q, 6, HeightGuard::default()).unwrap())
    });
}
