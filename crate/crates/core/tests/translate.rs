mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use wltl_core::automata::*;
use wltl_core::io::{parse_wba, parse_wts};
use wltl_core::logic::{parse_classical, parse_formula, ClassicalFormula as C};
use wltl_core::monoid::{ExtRat, Monoid};
use wltl_core::semantics::{eval, eval_classical};
use wltl_core::translate::*;

fn ev(f: &str, m: Monoid, w: &str) -> ExtRat {
    let a = formula_to_wba(&parse_formula(f).unwrap(), m).unwrap();
    wba_behavior(&a, &lasso(w)).unwrap()
}

#[test]
fn true_is_universal() {
    let b = ltl_to_buchi_over(&C::True, &aps(&["a"])).unwrap();
    let u = Buchi::universal(aps(&["a"])).unwrap();
    assert!(buchi_inclusion(&u, &b).unwrap().is_none());
}

fn classical_sweep(f: &str, seed: u64) {
    let f = parse_classical(f).unwrap();
    let ab: Vec<String> = f.atoms().into_iter().collect();
    let b = ltl_to_buchi(&f).unwrap();
    let mut r = rng(seed);
    for _ in 0..50 {
        let w = random_lasso(&mut r, &ab);
        assert_eq!(oracle_buchi(&b, &w), eval_classical(&f, &w), "{f} on {w}");
    }
}

#[test]
fn until_matches_classical_semantics() {
    classical_sweep("a U b", 1);
}

#[test]
fn fairness_matches_classical_semantics() {
    classical_sweep("G(a | b) & G F b", 2);
    classical_sweep("F G a | X(!a W b)", 3);
}

#[test]
fn weak_until_level_sets() {
    let f = "(3 & b) W (3 & a)";
    assert_eq!(ev(f, Monoid::K2, "| {b}"), ExtRat::int(3));
    assert_eq!(ev(f, Monoid::K2, "{b} {a} | {}"), ExtRat::int(3));
    assert_eq!(ev(f, Monoid::K2, "| {}"), ExtRat::NegInf);
}

#[test]
fn zero_has_empty_support() {
    let a = formula_to_wba(&parse_formula("0").unwrap(), Monoid::K2).unwrap();
    assert!(a.support().is_empty());
    assert_eq!(wba_behavior(&a, &lasso("| {}")).unwrap(), ExtRat::NegInf);
}

#[test]
fn fragment_violations_are_reported() {
    // `G` over a non-step operand is outside every translatable fragment.
    let f = parse_formula("G((3 & a) U (2 & b))").unwrap();
    assert!(matches!(formula_to_wba(&f, Monoid::K2), Err(wltl_core::Error::OutsideFragment(_))));
}

fn single_path(m: Monoid, weights: &[ExtRat], cycle: ExtRat) -> Wba {
    let mut a = Wba::new(m, aps(&["a"])).unwrap();
    let n = weights.len();
    for i in 0..=n {
        a.add_state(format!("q{i}"), i == n);
    }
    a.init.push(0);
    for (i, w) in weights.iter().enumerate() {
        a.set_weight(i, 1, i + 1, w.clone());
    }
    a.set_weight(n, 1, n, cycle);
    a
}

#[test]
fn k3_to_k2_examples() {
    let inf_loop = single_path(Monoid::K3, &[], ExtRat::PosInf);
    let w = lasso("| {a}");
    assert_eq!(wba_behavior(&k3_to_k2(&inf_loop).unwrap(), &w).unwrap(), ExtRat::PosInf);
    let five = single_path(Monoid::K3, &[ExtRat::int(5)], ExtRat::PosInf);
    assert_eq!(oracle_behavior(&five, &w), ExtRat::int(5));
    assert_eq!(oracle_behavior(&k3_to_k2(&five).unwrap(), &w), ExtRat::int(5));
}

/// The level construction read literally: the level copies loop on every letter and follow
/// any transition whose weight is at most the level, `-inf` included.
fn k3_to_k2_literal(a: &Wba) -> Wba {
    let levels: Vec<ExtRat> = a.image().into_iter().filter(|v| !v.is_pos_inf()).collect();
    let n = a.num_states();
    let mut out = Wba::new(Monoid::K2, a.aps().to_vec()).unwrap();
    for p in 0..n {
        out.add_state(format!("{p}"), a.fin[p]);
    }
    for c in &levels {
        for p in 0..n {
            out.add_state(format!("{p}@{c}"), a.fin[p]);
        }
    }
    out.init = a.init.clone();
    let lvl = |ci: usize, p: usize| n + ci * n + p;
    let letters = 1u32 << a.aps().len();
    for p in 0..n {
        for s in 0..letters {
            for q in 0..n {
                let w = a.weight(p, s, q);
                out.set_weight(p, s, q, w.clone());
                for (ci, c) in levels.iter().enumerate() {
                    if &w == c {
                        out.set_weight(p, s, lvl(ci, q), w.clone());
                    }
                    if p != q && &w <= c {
                        out.set_weight(lvl(ci, p), s, lvl(ci, q), c.clone());
                    }
                    if p == q {
                        out.set_weight(lvl(ci, p), s, lvl(ci, q), c.clone());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn literal_k3_to_k2_overestimates() {
    let mut a = Wba::new(Monoid::K3, aps(&["a", "b"])).unwrap();
    let q0 = a.add_state("q0", false);
    let q1 = a.add_state("q1", true);
    a.init.push(q0);
    a.set_weight(q0, 1, q1, ExtRat::int(5));
    a.set_weight(q1, 1, q1, ExtRat::PosInf);
    // After `a`, only `a` has transitions, so `a b^w` has no run.
    let w = lasso("{a} | {b}");
    assert_eq!(oracle_behavior(&a, &w), ExtRat::NegInf);
    assert_eq!(oracle_behavior(&k3_to_k2_literal(&a), &w), ExtRat::int(5));
    assert_eq!(oracle_behavior(&k3_to_k2(&a).unwrap(), &w), ExtRat::NegInf);
}

#[test]
fn k3_to_k2_matches_oracle() {
    let mut r = rng(33);
    let ab = aps(&["a", "b"]);
    for _ in 0..30 {
        let a = random_wba(&mut r, Monoid::K3, 4, &ab);
        let b = k3_to_k2(&a).unwrap();
        for _ in 0..20 {
            let w = random_lasso(&mut r, &ab);
            assert_eq!(oracle_behavior(&b, &w), oracle_behavior(&a, &w), "{w}");
        }
    }
}

#[test]
fn threshold_k2_examples() {
    let a = normalize_wba(&parse_wba(&fixture("two_branch.wba")).unwrap());
    let t = threshold_buchi_k2(&a, &ExtRat::int(3)).unwrap();
    assert!(t.accepts(&lasso("{a} | {b}")));
    assert!(!t.accepts(&lasso("{a} | {a}")));
    let u = threshold_buchi_k2(&a, &ExtRat::NegInf).unwrap();
    assert!(u.accepts(&lasso("{b} | {a}")));
    let raw = parse_wba(&fixture("two_branch.wba")).unwrap();
    assert!(raw.is_normalized());
    let unnormalized = Wba { init: vec![0, 1], ..raw };
    assert!(matches!(threshold_buchi_k2(&unnormalized, &ExtRat::int(3)), Err(wltl_core::Error::NotNormalized)));
}

#[test]
fn threshold_k1_examples() {
    let w = lasso("| {a}");
    let inf = single_path(Monoid::K1, &[], ExtRat::PosInf);
    assert!(threshold_buchi_k1(&inf, &ExtRat::int(7)).unwrap().accepts(&w));
    let seven = single_path(Monoid::K1, &[ExtRat::int(7)], ExtRat::PosInf);
    assert!(threshold_buchi_k1(&seven, &ExtRat::int(5)).unwrap().accepts(&w));
    let low = single_path(Monoid::K1, &[ExtRat::int(3), ExtRat::int(7)], ExtRat::PosInf);
    assert!(!threshold_buchi_k1(&low, &ExtRat::int(5)).unwrap().accepts(&w));
}

fn robot() -> Wba {
    wts_to_wba(&parse_wts(&fixture("robot.wts")).unwrap()).unwrap()
}

#[test]
fn robot_behaviors() {
    let a = robot();
    assert_eq!(wba_behavior(&a, &lasso("| {} {gather} {control,upload}")).unwrap(), ExtRat::int(8));
    assert_eq!(wba_behavior(&a, &lasso("| {} {gather} {upload}")).unwrap(), ExtRat::int(10));
    assert_eq!(wba_behavior(&a, &lasso("| {gather}")).unwrap(), ExtRat::NegInf);
}

#[test]
fn robot_runs_are_determined_by_their_words() {
    let t = parse_wts(&fixture("robot.wts")).unwrap();
    let distinct = |states: Vec<usize>| {
        let labels: Vec<_> = states.iter().map(|&q| &t.labels[q]).collect();
        labels.iter().collect::<std::collections::BTreeSet<_>>().len() == labels.len()
    };
    assert!(distinct(t.init.clone()));
    for p in 0..t.names.len() {
        assert!(distinct(t.edges.iter().filter(|e| e.0 == p).map(|e| e.1).collect()));
    }
}

#[test]
fn robot_formula_matches_semantics() {
    let f = parse_formula(&fixture("robot.wltl")).unwrap();
    let a = formula_to_wba(&f, Monoid::K2).unwrap();
    let fam = ThresholdFamily::new(&a).unwrap();
    for w in ["| {} {gather} {control,upload}", "| {} {gather} {upload}", "| {gather}", "{} {gather} | {upload} {}"] {
        assert_eq!(fam.behavior(&lasso(w)), eval(&f, &lasso(w), Monoid::K2), "{w}");
    }
}

fn random_classical(r: &mut impl Rng, d: usize) -> C {
    if d == 0 || r.gen_bool(0.3) {
        let a = C::atom(if r.gen_bool(0.5) { "a" } else { "b" });
        return if r.gen_bool(0.3) { C::not(a) } else { a };
    }
    let sub = |r: &mut _| random_classical(r, d - 1);
    match r.gen_range(0..8) {
        0 => C::and(sub(r), sub(r)),
        1 => C::or(sub(r), sub(r)),
        2 => C::next(sub(r)),
        3 => C::until(sub(r), sub(r)),
        4 => C::weak_until(sub(r), sub(r)),
        5 => C::always(sub(r)),
        6 => C::eventually(sub(r)),
        _ => C::not(sub(r)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tableau_matches_classical_semantics(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_classical(&mut r, 3);
        let ab = aps(&["a", "b"]);
        let b = ltl_to_buchi_over(&f, &ab).unwrap();
        for _ in 0..10 {
            let w = random_lasso(&mut r, &ab);
            prop_assert_eq!(oracle_buchi(&b, &w), eval_classical(&f, &w), "{} on {}", f, w);
        }
    }

    #[test]
    fn level_sets_match_semantics(seed in any::<u64>(), mi in 0usize..3) {
        let mut r = rng(seed);
        let m = Monoid::all()[mi];
        let f = FormulaGen::new(2).member(&mut r, m, 3);
        let ab = aps(&["a", "b"]);
        let a = formula_to_wba_over(&f, m, &ab).unwrap();
        for _ in 0..5 {
            let w = random_lasso(&mut r, &ab);
            prop_assert_eq!(oracle_behavior(&a, &w), eval(&f, &w, m), "{} on {}", f, w);
        }
    }
}
