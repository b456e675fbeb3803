use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use excoll::algebra::int;
use excoll::crab::{crab_weights_within_sq, g2, non_far_crab_weights};
use excoll::search::engine::Count;
use excoll::search::Engine;
use excoll::Weight;

fn workers() -> usize {
    // at least two so the parallel path is exercised on a single core
    std::thread::available_parallelism().map_or(1, |n| n.get()).max(2)
}

fn count(engine: &Engine, jobs: usize) -> u64 {
    engine.run_split(jobs, Count::default).iter().map(|c| c.maximal).sum()
}

fn search(c: &mut Criterion) {
    let small: Vec<Weight> = crab_weights_within_sq(&int(400)).into_iter().filter(|&w| w != Weight::ZERO).collect();
    let pools = [("r2-400", small), ("nodmz", non_far_crab_weights().to_vec())];
    let mut group = c.benchmark_group("maximal-collections");
    group.sample_size(20);
    for (name, pool) in &pools {
        let engine = Engine::new(g2(), &[Weight::ZERO], pool).unwrap();
        group.bench_with_input(BenchmarkId::new("sequential", name), &engine, |b, e| b.iter(|| count(e, 1)));
        let n = workers();
        group.bench_with_input(BenchmarkId::new(format!("parallel-{n}"), name), &engine, |b, e| b.iter(|| count(e, n)));
    }
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
