use criterion::{black_box, criterion_group, criterion_main, Criterion};
use wltl_bench::*;
use wltl_core::automata::{buchi_complement, buchi_inclusion, normalize_wba, ComplementLimits};
use wltl_core::decide::{decide_formula_automaton, quantitative_equivalence};
use wltl_core::semantics::eval;
use wltl_core::translate::{formula_to_wba, threshold_buchi, ThresholdFamily};
use wltl_core::{ExtRat, Monoid};

fn robot_pipeline(c: &mut Criterion) {
    let (f, a) = robot();
    let w = lasso("{} {gather} | {control,upload} {} {gather} {upload}");
    c.bench_function("robot/eval", |b| b.iter(|| eval(black_box(&f), &w, Monoid::K2)));
    c.bench_function("robot/formula_to_wba", |b| b.iter(|| formula_to_wba(black_box(&f), Monoid::K2).unwrap()));
    c.bench_function("robot/threshold_8", |b| b.iter(|| threshold_buchi(black_box(&a), &ExtRat::int(8)).unwrap()));
    let fam = ThresholdFamily::new(&a).unwrap();
    c.bench_function("robot/behavior", |b| b.iter(|| fam.behavior(black_box(&w))));
    c.bench_function("robot/decide", |b| b.iter(|| decide_formula_automaton(black_box(&f), &a, &ExtRat::int(8)).unwrap()));
}

fn decisions(c: &mut Criterion) {
    let (ap, apbp) = (buchi("aplus.ba"), buchi("aplusbplus.ba"));
    c.bench_function("inclusion/aplus_in_aplusbplus", |b| b.iter(|| buchi_inclusion(black_box(&ap), &apbp).unwrap()));
    let a = random_wba(3, Monoid::K2, 4);
    let n = normalize_wba(&a);
    c.bench_function("equivalence/normalize_k2_4", |b| b.iter(|| quantitative_equivalence(black_box(&a), &n).unwrap()));
    let k3 = random_wba(4, Monoid::K3, 4);
    c.bench_function("equivalence/self_k3_4", |b| b.iter(|| quantitative_equivalence(black_box(&k3), &k3).unwrap()));
    let r = random_buchi(5, 3);
    c.bench_function("complement/random_3", |b| b.iter(|| buchi_complement(black_box(&r), ComplementLimits::default()).unwrap()));
}

criterion_group!(benches, robot_pipeline, decisions);
criterion_main!(benches);
