//! Sequential versus rayon-parallel sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ke_core::parallel::Execution;
use ke_core::verify::{kostant_baseline, route_agreement, truncation_commutation, SweepConfig};

const SMALL: SweepConfig = SweepConfig {
    max_size: 4,
    max_d: 5,
    max_k: 3,
    dual_size: 8,
    count_k: 8,
    kostant_entry: 2,
};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        let name = format!("{exec:?}").to_lowercase();
        group.bench_with_input(
            BenchmarkId::new("route_agreement", &name),
            &exec,
            |b, &e| b.iter(|| route_agreement(&SMALL, e)),
        );
        group.bench_with_input(BenchmarkId::new("truncation", &name), &exec, |b, &e| {
            b.iter(|| truncation_commutation(&SMALL, e))
        });
        group.bench_with_input(BenchmarkId::new("kostant", &name), &exec, |b, &e| {
            b.iter(|| kostant_baseline(&SMALL, e))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
