use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use unruh_bench::{transformed_werner, werner_edge};
use unruh_core::sweep::sweep_csv;
use unruh_core::{
    concurrence, find_thresholds, herm_eigen, measure_report, Acceleration, FamilyKind, SweepSpec,
};

fn eigensolver(c: &mut Criterion) {
    let rho = transformed_werner(0.7, 0.4);
    c.bench_function("herm_eigen 4x4", |b| {
        b.iter(|| herm_eigen(black_box(rho.matrix())))
    });
}

fn measures(c: &mut Criterion) {
    let mut g = c.benchmark_group("concurrence");
    for (name, rho) in [
        ("generic", transformed_werner(0.7, 0.4)),
        ("rank-deficient", werner_edge()),
    ] {
        g.bench_with_input(BenchmarkId::from_parameter(name), &rho, |b, rho| {
            b.iter(|| concurrence(black_box(rho)))
        });
    }
    g.finish();

    let rho = transformed_werner(0.7, 0.4);
    c.bench_function("measure_report", |b| {
        b.iter(|| measure_report(black_box(&rho)))
    });
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    for steps in [11, 101] {
        let spec = SweepSpec {
            p_steps: steps,
            ..SweepSpec::default()
        };
        g.bench_with_input(BenchmarkId::new("default_csv", steps), &spec, |b, spec| {
            b.iter(|| sweep_csv(black_box(spec)))
        });
    }
    g.bench_function("werner_thresholds", |b| {
        b.iter(|| find_thresholds(FamilyKind::Werner, Acceleration::Finite(1.0), 1.0))
    });
    g.finish();
}

criterion_group!(benches, eigensolver, measures, sweeps);
criterion_main!(benches);
