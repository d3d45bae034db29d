use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use proxdual::dsl::{self, RunOptions};
use proxdual::{check_law, CheckOptions, Proximity, Subject, Universe};
use proxdual_bench::{evens, finite_cofinite_proximity, partitions_of_four, EVENS_ODDS};

fn round_trip(c: &mut Criterion) {
    let algebras = partitions_of_four();
    let opts = CheckOptions::default();
    c.bench_function("thm.2.1.4 over 15 partitions", |b| {
        b.iter(|| {
            for m in &algebras {
                black_box(check_law("thm.2.1.4", &[Subject::Algebra(m.clone())], &opts).unwrap());
            }
        })
    });
}

fn axioms(c: &mut Criterion) {
    let opts = CheckOptions::default();
    let d = Proximity::discrete(Universe::Finite(4));
    c.bench_function("prox.axioms discrete finite(4)", |b| {
        b.iter(|| black_box(check_law("prox.axioms", &[Subject::Proximity(d.clone())], &opts).unwrap()))
    });
    let one = Proximity::one_point(Universe::integers()).unwrap();
    c.bench_function("prox.axioms one_point integers", |b| {
        b.iter(|| black_box(check_law("prox.axioms", &[Subject::Proximity(one.clone())], &opts).unwrap()))
    });
}

fn p_aleph1(c: &mut Criterion) {
    let d = finite_cofinite_proximity();
    let opts = CheckOptions { first_counterexample: true, ..CheckOptions::default() };
    c.bench_function("p_aleph1 finite_cofinite first counterexample", |b| {
        b.iter(|| black_box(check_law("p_aleph1", &[Subject::Proximity(d.clone())], &opts).unwrap()))
    });
    let e = evens();
    c.bench_function("strongly_below prefix of evens", |b| {
        let a = e.enumeration_prefix(64).unwrap();
        b.iter(|| black_box(d.strongly_below(&a, &e).unwrap()))
    });
}

fn stone(c: &mut Criterion) {
    let algebras = partitions_of_four();
    let opts = CheckOptions::default();
    c.bench_function("smirnov over 15 partitions", |b| {
        b.iter(|| {
            for m in &algebras {
                black_box(check_law("smirnov", &[Subject::Algebra(m.clone())], &opts).unwrap());
            }
        })
    });
}

fn script(c: &mut Criterion) {
    c.bench_function("parse evens/odds script", |b| b.iter(|| black_box(dsl::parse(EVENS_ODDS).unwrap())));
    let program = dsl::parse(EVENS_ODDS).unwrap();
    let opts = RunOptions::default();
    c.bench_function("run evens/odds script", |b| b.iter(|| black_box(dsl::run(&program, &opts).unwrap())));
}

criterion_group!(benches, round_trip, axioms, p_aleph1, stone, script);
criterion_main!(benches);
