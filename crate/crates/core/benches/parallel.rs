use std::sync::Arc;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use harmonica::operators::{GradedMap, OperatorSpec};
use harmonica::par::Exec;
use harmonica::spaces::{harmonics, Coinvariants, Component, HookAmbient, Isotype};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn coinvariants(c: &mut Criterion) {
    let mut g = c.benchmark_group("coinvariants");
    for n in [3, 4] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| Coinvariants::build(n, exec))
            });
        }
    }
    g.finish();
}

fn hook_component(c: &mut Criterion) {
    let mut g = c.benchmark_group("hook_component");
    let dr = Arc::new(Coinvariants::build(4, Exec::default()));
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| Component::new(Arc::new(HookAmbient::new(dr.clone())), Isotype::Sign, exec))
        });
    }
    g.finish();
}

fn operator_matrices(c: &mut Criterion) {
    let mut g = c.benchmark_group("f1_on_hook");
    let dr = Arc::new(Coinvariants::build(4, Exec::default()));
    let hook = Component::new(
        Arc::new(HookAmbient::new(dr)),
        Isotype::Sign,
        Exec::default(),
    );
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| GradedMap::of_operator(OperatorSpec::F(1), &hook, exec).unwrap())
        });
    }
    g.finish();
}

fn harmonic_space(c: &mut Criterion) {
    let mut g = c.benchmark_group("harmonics");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, 3), |b| b.iter(|| harmonics(3, exec)));
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(3));
    targets = coinvariants, hook_component, operator_matrices, harmonic_space
}
criterion_main!(benches);
