use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use homalg_bench::{operators, trialgebra, truncated};
use homalg_core::battery::{run_battery, BatteryConfig, Setting};
use homalg_core::forge::catalog;
use homalg_core::varieties::hom_jordan;
use homalg_core::{certify, certify_operator, check_schema, check_schema_random, polarize, VarietyTag};

fn exhaustive(c: &mut Criterion) {
    let mut g = c.benchmark_group("hom-associative");
    for n in [2, 4, 6, 8] {
        let a = truncated(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| certify(black_box(a), VarietyTag::HomAssociative).unwrap())
        });
    }
    g.finish();
}

fn polarized(c: &mut Criterion) {
    let a = truncated(4).with_product("circ", truncated(4).product("mul").unwrap().clone());
    let i = a.interpretation().unwrap();
    let s = polarize(&hom_jordan("circ").remove(1));
    c.bench_function("hom-jordan polarized dim 4", |b| b.iter(|| check_schema(black_box(&s), &i).unwrap()));
    c.bench_function("hom-jordan sampled dim 4", |b| b.iter(|| check_schema_random(black_box(&s), &i, 50, 1).unwrap()));
}

fn trialgebra_axioms(c: &mut Criterion) {
    let t = trialgebra();
    c.bench_function("trialgebra example", |b| {
        b.iter(|| certify(black_box(&t), VarietyTag::HomAssociativeTrialgebra).unwrap())
    });
}

fn operator_checks(c: &mut Criterion) {
    let ops = operators();
    c.bench_function("catalog operators", |b| {
        b.iter(|| {
            for (op, k) in &ops {
                certify_operator(black_box(op), k).unwrap();
            }
        })
    });
}

fn battery(c: &mut Criterion) {
    let cat = catalog().unwrap();
    let cfg = BatteryConfig { samples: 20, ..BatteryConfig::default() };
    let mut g = c.benchmark_group("battery");
    g.sample_size(10);
    for s in Setting::ALL {
        g.bench_function(s.name(), |b| b.iter(|| run_battery(s, &cat, &cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, exhaustive, polarized, trialgebra_axioms, operator_checks, battery);
criterion_main!(benches);
