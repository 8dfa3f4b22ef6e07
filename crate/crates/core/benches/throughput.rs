use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use treeforge::search::{Enumerator, Predicate};
use treeforge::{idoneal, witness, Exec};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn witness_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("witness_scan_3_2000");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| witness::scan(3, black_box(2000), exec).unwrap())
        });
    }
    group.finish();
}

fn idoneal_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("idoneal_scan_100000");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| idoneal::scan(black_box(100_000), exec))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("connected_graphs_7");
    group.sample_size(10);
    for (name, exec) in MODES {
        let e = Enumerator::new(7, exec);
        group.bench_function(name, |b| b.iter(|| e.connected_graphs(black_box(7), &Predicate::all()).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, witness_scan, idoneal_scan, enumeration);
criterion_main!(benches);
