//! Sequential against parallel execution of the main data-parallel loops.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gaussoids::algebra::{compatibility_violations, quadric_space};
use gaussoids::enumerate::{count_oriented, gaussoid_models, OrientedMode};
use gaussoids::{GroundSet, Group, GroupAction, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn census(c: &mut Criterion) {
    let gs = GroundSet::new(4).unwrap();
    let mut group = c.benchmark_group("n4");
    group.sample_size(10);
    let models = gaussoid_models(&gs, Strategy::Sequential).unwrap();
    let action = GroupAction::new(&gs, Group::Hyperoct).unwrap();
    let quadrics = quadric_space(&gs, Strategy::Sequential).generators;
    for (name, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("gaussoid census", name), &strategy, |b, &s| {
            b.iter(|| gaussoid_models(&gs, s).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("oriented census", name), &strategy, |b, &s| {
            b.iter(|| count_oriented(&gs, OrientedMode::All, s).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("hyperoctahedral orbits", name), &strategy, |b, &s| {
            b.iter(|| action.partition(&models, s).unwrap().len())
        });
        group.bench_with_input(BenchmarkId::new("compatibility sweep", name), &strategy, |b, &s| {
            b.iter(|| compatibility_violations(&gs, &models, &quadrics, s).violations.len())
        });
    }
    group.finish();
}

criterion_group!(benches, census);
criterion_main!(benches);
