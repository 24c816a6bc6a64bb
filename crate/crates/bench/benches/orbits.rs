use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use origami_bench::seeds;
use origami_core::h2::Q;
use origami_core::h2_surface::{origami_to_prototype, realize_butterfly_word};
use origami_core::orbit::OrbitGraph;

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, o) in seeds() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &o, |b, o| {
            b.iter(|| o.canonical_key())
        });
    }
    group.finish();
}

fn bench_orbit_bfs(c: &mut Criterion) {
    let mut group = c.benchmark_group("orbit_bfs");
    group.sample_size(10);
    for (name, o) in seeds() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &o, |b, o| {
            b.iter(|| OrbitGraph::build(o, 1_000_000).unwrap().len())
        });
    }
    group.finish();
}

fn bench_diameter(c: &mut Criterion) {
    let mut group = c.benchmark_group("diameter");
    group.sample_size(10);
    for (name, o) in seeds() {
        let g = OrbitGraph::build(&o, 1_000_000).unwrap();
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| g.diameter_all_pairs())
        });
    }
    group.finish();
}

fn bench_butterfly_realization(c: &mut Criterion) {
    let mut group = c.benchmark_group("realize_butterfly");
    group.sample_size(10);
    for (name, o) in seeds() {
        let p = origami_to_prototype(&o).unwrap();
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| realize_butterfly_word(&o, Q::Finite(1)).unwrap().0.len())
        });
        let _ = p;
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_canonical_form,
    bench_orbit_bfs,
    bench_diameter,
    bench_butterfly_realization
);
criterion_main!(benches);
