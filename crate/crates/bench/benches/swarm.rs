use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use psolab_core::objective::{schaffer_f6, BudgetedEvaluator, Point};
use psolab_core::{run_single, Swarm, SwarmConfig, Variant};

fn objective(c: &mut Criterion) {
    let p = Point::new(vec![3.0, 4.0]).unwrap();
    c.bench_function("schaffer_f6", |b| b.iter(|| schaffer_f6(black_box(&p))));
}

fn full_budget_runs(c: &mut Criterion) {
    // unreachable threshold: every run spends all 4000 evaluations
    let cfg = SwarmConfig {
        success_threshold: -1.0,
        ..SwarmConfig::default()
    };
    let mut group = c.benchmark_group("run_4000_evals");
    for v in Variant::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(v), &v, |b, &v| {
            b.iter(|| run_single(&cfg, v, 0, black_box(17)).unwrap())
        });
    }
    group.finish();
}

fn single_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    for v in Variant::ALL {
        let cfg = v.apply(&SwarmConfig {
            success_threshold: -1.0,
            budget: u64::MAX,
            ..SwarmConfig::default()
        });
        let mut ev = BudgetedEvaluator::new(cfg.objective, cfg.budget);
        let swarm = Swarm::init(cfg, 5, &mut ev).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(v), &swarm, |b, swarm| {
            b.iter_batched(
                || (swarm.clone(), ev.clone()),
                |(mut s, mut e)| s.step(&mut e).unwrap(),
                criterion::BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

criterion_group!(benches, objective, full_budget_runs, single_sweep);
criterion_main!(benches);
