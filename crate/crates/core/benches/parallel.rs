use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use zipcone::hasse::enumerate_triples;
use zipcone::par::Exec;
use zipcone::rootdata::build_root_datum;
use zipcone::weyl::enumerate_parabolic_with;

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn triples(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_triples");
    g.sample_size(10);
    for (name, exec) in EXECS {
        g.bench_with_input(BenchmarkId::new(name, 8), &exec, |b, &e| {
            b.iter(|| enumerate_triples(8, false, e).unwrap())
        });
    }
    g.finish();
}

fn weyl(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_parabolic");
    g.sample_size(10);
    for label in ["E6", "F4", "B6"] {
        let rd = build_root_datum(label).unwrap();
        let all: Vec<usize> = (0..rd.semisimple_rank()).collect();
        for (name, exec) in EXECS {
            g.bench_with_input(BenchmarkId::new(name, label), &exec, |b, &e| {
                b.iter(|| enumerate_parabolic_with(&rd, &all, 1_000_000, e).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, triples, weyl);
criterion_main!(benches);
