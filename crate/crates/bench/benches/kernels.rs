//! Benchmarks for the hot search kernels: clique branch-and-bound, the
//! path-power dynamic program, the exact avoidance engine, and the
//! extraction pipeline.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use oramsey_core::exact::{find_avoiding_coloring, AvoidanceInstance};
use oramsey_core::extractors::{erdos_szekeres_extract, pipeline_path_vs_clique, PipelineParams};
use oramsey_core::finders::{find_clique, longest_path_power, SearchBudget};
use oramsey_core::{EdgeColoring, OrderedGraph, Pattern};

fn random_graph(n: usize, p: f64, seed: u64) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = OrderedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn bench_clique_search(c: &mut Criterion) {
    let g = random_graph(60, 0.5, 1);
    let budget = SearchBudget::default();
    c.bench_function("find_clique k=7 on G(60, 0.5)", |b| {
        b.iter(|| black_box(find_clique(black_box(&g), 7, &budget)))
    });
}

fn bench_path_power_dp(c: &mut Criterion) {
    let g = random_graph(200, 0.4, 2);
    c.bench_function("longest_path_power t=2 on G(200, 0.4)", |b| {
        b.iter(|| black_box(longest_path_power(black_box(&g), 2, None)))
    });
}

fn bench_exact_engine(c: &mut Criterion) {
    let inst = AvoidanceInstance::new(
        6,
        Pattern::Clique { s: 3 },
        Pattern::MonotonePath { n: 4 },
    )
    .unwrap();
    let budget = SearchBudget::default();
    c.bench_function("find_avoiding_coloring (clique:3, mpath:4) N=6", |b| {
        b.iter(|| black_box(find_avoiding_coloring(black_box(&inst), &budget)))
    });
}

fn bench_es_extractor(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let hosts: Vec<EdgeColoring> = (0..32)
        .map(|_| EdgeColoring::random(9, 2, &mut rng).unwrap())
        .collect();
    c.bench_function("erdos_szekeres_extract (3,5) on K9 x32", |b| {
        b.iter(|| {
            for h in &hosts {
                black_box(erdos_szekeres_extract(black_box(h), 3, 5).unwrap());
            }
        })
    });
}

fn bench_pipeline(c: &mut Criterion) {
    let g = random_graph(120, 0.7, 4);
    let params = PipelineParams {
        s: 2,
        t: 2,
        n: 6,
        block_size: 10,
        a_min: 2,
        budget: SearchBudget::default(),
        seed: 9,
        retries: 10,
    };
    c.bench_function("pipeline s=2 t=2 on G(120, 0.7)", |b| {
        b.iter(|| black_box(pipeline_path_vs_clique(black_box(&g), &params)))
    });
}

criterion_group!(
    benches,
    bench_clique_search,
    bench_path_power_dp,
    bench_exact_engine,
    bench_es_extractor,
    bench_pipeline
);
criterion_main!(benches);
