//! Criterion benches comparing the rayon sweep path against the sequential
//! fallback on the toolkit's embarrassingly parallel workloads.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use twistlab_core::exec;

fn bench_placeholder(c: &mut Criterion) {
    let xs: Vec<u64> = (0..1024).collect();
    c.bench_function("map_par", |b| {
        b.iter(|| exec::map(black_box(&xs), |x| x.wrapping_mul(2654435761)))
    });
    c.bench_function("map_seq", |b| {
        b.iter(|| exec::map_seq(black_box(&xs), |x| x.wrapping_mul(2654435761)))
    });
}

criterion_group!(benches, bench_placeholder);
criterion_main!(benches);
