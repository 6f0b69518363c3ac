use criterion::{black_box, criterion_group, criterion_main, Criterion};

use antinef::classify::classification_report;
use antinef::cycles::GSource;
use antinef::zariski::{oracle_decompose, zariski_decompose};
use antinef::{fundamental_cycle, validate_config};
use antinef_bench::{dense5, e8_raw, e8_with_transversal, ex1};

fn bench_validate(c: &mut Criterion) {
    let raw = e8_raw();
    c.bench_function("validate_e8_minors", |b| {
        b.iter(|| validate_config(black_box(raw.clone())).unwrap())
    });
}

fn bench_decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("zariski_decompose");
    for (name, (cfg, d)) in [
        ("ex1", ex1()),
        ("dense5", dense5()),
        ("e8_transversal", e8_with_transversal()),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| zariski_decompose(black_box(&cfg), black_box(&d)).unwrap())
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let (cfg, d) = dense5();
    c.bench_function("oracle_decompose_dense5", |b| {
        b.iter(|| oracle_decompose(black_box(&cfg), black_box(&d)).unwrap())
    });
}

fn bench_fundcycle(c: &mut Criterion) {
    let cfg = validate_config(e8_raw()).unwrap();
    c.bench_function("fundamental_cycle_e8", |b| {
        b.iter(|| fundamental_cycle(black_box(&cfg)).unwrap())
    });
}

fn bench_classify(c: &mut Criterion) {
    let (cfg, d) = e8_with_transversal();
    c.bench_function("classification_report_e8", |b| {
        b.iter(|| {
            classification_report(black_box(&cfg), black_box(&d), &GSource::FromFundamentalCycle)
                .unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_validate,
    bench_decompose,
    bench_oracle,
    bench_fundcycle,
    bench_classify
);
criterion_main!(benches);
