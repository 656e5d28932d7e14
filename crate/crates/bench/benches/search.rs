use std::hint::black_box;
use std::time::Duration;

use bcolor_bench::{dense_geometric, sparse_geometric};
use bcolor_core::vns::{order_vertices, shake, vnd, Deadline, SolverRng};
use bcolor_core::{evaluate, greedy_ub, solve, CriteriaMask, GreedyOrder, SearchState, SolverConfig};
use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};

fn random_state(g: &bcolor_core::WeightedGraph, nc: u32, seed: u64) -> SearchState<'_> {
    let mut rng = SolverRng::seed_from_u64(seed);
    let colors = (0..g.n()).map(|_| rng.random_range(1..=nc)).collect();
    SearchState::new(g, bcolor_core::Coloring::new(colors).unwrap(), nc).unwrap()
}

fn bench_evaluation(c: &mut Criterion) {
    let g = dense_geometric(120, 1);
    let state = random_state(&g, 80, 2);
    let coloring = state.coloring();
    c.bench_function("evaluate/dense120", |b| b.iter(|| evaluate(black_box(&g), &coloring)));
    c.bench_function("find_best_recoloring/dense120", |b| {
        let mut s = state.clone();
        let mut v = 0;
        b.iter(|| {
            v = (v + 1) % g.n();
            black_box(s.find_best_recoloring(v))
        })
    });
    c.bench_function("order_vertices/dense120", |b| {
        b.iter(|| order_vertices(black_box(&state), CriteriaMask::ALL))
    });
}

fn bench_construction(c: &mut Criterion) {
    let g = dense_geometric(120, 1);
    c.bench_function("greedy/dense120", |b| {
        b.iter(|| greedy_ub(black_box(&g), GreedyOrder::Id))
    });
}

fn bench_descent(c: &mut Criterion) {
    let g = sparse_geometric(100, 3);
    let base = random_state(&g, greedy_ub(&g, GreedyOrder::Id).span() - 1, 4);
    c.bench_function("shake_vnd/sparse100", |b| {
        let mut rng = SolverRng::seed_from_u64(5);
        b.iter_batched(
            || base.clone(),
            |mut s| {
                shake(&mut s, 10, &mut rng);
                vnd(
                    &mut s,
                    &Deadline::never(),
                    CriteriaMask::ALL,
                    &mut rng,
                    &mut |_: &SearchState<'_>| {},
                );
                s.total_penalty()
            },
            BatchSize::SmallInput,
        )
    });

    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(10));
    let cfg = SolverConfig {
        max_iterations: Some(200),
        time_limit: Duration::from_secs(3600),
        seed: 7,
        ..SolverConfig::default()
    };
    group.bench_function("200_iterations/sparse100", |b| {
        b.iter(|| solve(&g, &cfg).unwrap().k_star)
    });
    group.finish();
}

criterion_group!(benches, bench_evaluation, bench_construction, bench_descent);
criterion_main!(benches);
