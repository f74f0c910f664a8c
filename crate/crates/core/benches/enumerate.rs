use std::fs::File;
use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use transit_arbitrage::{
    build_network, load_network, ArbitrageEngine, Execution, FareTable, Money, RouteDef, StationId,
    TransitNetwork,
};

fn bart_topology() -> TransitNetwork {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/bart");
    load_network(
        File::open(dir.join("stations.csv")).unwrap(),
        File::open(dir.join("routes.csv")).unwrap(),
    )
    .unwrap()
}

/// Random recursive tree, one two-station route per edge.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> TransitNetwork {
    let id = |i: usize| StationId::new(format!("t{i:04}")).unwrap();
    let routes = (1..n)
        .map(|k| RouteDef::new(format!("e{k}"), vec![id(rng.gen_range(0..k)), id(k)]))
        .collect();
    build_network((0..n).map(|i| (id(i), format!("T{i}"))).collect(), routes).unwrap()
}

fn enumerate(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2014);
    let mut cases = vec![("bart-44", bart_topology())];
    cases.push(("tree-80", random_tree(&mut rng, 80)));

    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (name, net) in &cases {
        let fares = FareTable::from_fn(net, |_| Money::from_cents(rng.gen_range(100..1000)));
        let engine = ArbitrageEngine::new(net, &fares).unwrap();
        for (label, execution) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(label, name), &engine, |b, e| {
                b.iter(|| black_box(e.enumerate(Money::from_cents(5), execution)))
            });
        }
    }
    group.finish();
}

fn summarize(c: &mut Criterion) {
    let net = bart_topology();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let fares = FareTable::from_fn(&net, |_| Money::from_cents(rng.gen_range(100..1000)));
    let engine = ArbitrageEngine::new(&net, &fares).unwrap();
    let thresholds = [Money::from_cents(5), Money::from_cents(100)];
    let mut group = c.benchmark_group("summarize");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(engine.summarize(&thresholds, Execution::Sequential)))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(engine.summarize(&thresholds, Execution::Parallel)))
    });
    group.finish();
}

criterion_group!(benches, enumerate, summarize);
criterion_main!(benches);
