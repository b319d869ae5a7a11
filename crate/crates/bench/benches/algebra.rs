use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use lingtruth_core::axioms::check_all_axioms;
use lingtruth_core::inference::{inference_table, RuleId};
use lingtruth_core::oracle::cross_check_ops;
use lingtruth_core::Formula;
use lingtruth_bench::sweep;

fn axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("axioms");
    for config in sweep(8) {
        group.bench_with_input(BenchmarkId::from_parameter(&config), &config, |b, cfg| {
            b.iter(|| check_all_axioms(black_box(cfg)))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross_check");
    for config in sweep(8) {
        group.bench_with_input(BenchmarkId::from_parameter(&config), &config, |b, cfg| {
            b.iter(|| cross_check_ops(black_box(cfg)))
        });
    }
    group.finish();
}

fn inference(c: &mut Criterion) {
    let mut group = c.benchmark_group("inference_table");
    for config in sweep(8) {
        for rule in [RuleId::MP, RuleId::MT] {
            group.bench_with_input(BenchmarkId::new(rule.to_string(), &config), &config, |b, cfg| {
                b.iter(|| inference_table(black_box(cfg), rule))
            });
        }
    }
    group.finish();
}

fn parse(c: &mut Criterion) {
    let text = "((P -> Q) & (Q -> R)) -> !(P & !R) | (S -> (T -> P))";
    c.bench_function("parse_render", |b| {
        b.iter(|| Formula::parse(black_box(text)).map(|f| f.render()))
    });
}

criterion_group!(benches, axioms, oracle, inference, parse);
criterion_main!(benches);
