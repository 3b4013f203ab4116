mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use wltl_core::io::*;
use wltl_core::logic::{parse_classical, parse_formula, ClassicalFormula as C, Formula};
use wltl_core::monoid::{ExtRat, Monoid};
use wltl_core::semantics::Lasso;
use wltl_core::translate::Wts;

fn constant(r: &mut impl Rng) -> ExtRat {
    match r.gen_range(0..6) {
        0 => ExtRat::PosInf,
        1 => ExtRat::NegInf,
        2 => ExtRat::int(0),
        3 => ExtRat::frac(r.gen_range(-9..10), r.gen_range(1..5)),
        _ => ExtRat::int(r.gen_range(-3..10)),
    }
}

fn formula(r: &mut impl Rng, d: usize) -> Formula {
    let atom = *["a", "b", "c_1"].choose(r).unwrap();
    let b = |f: Formula| Box::new(f);
    if d == 0 {
        return match r.gen_range(0..3) {
            0 => Formula::Const(constant(r)),
            1 => Formula::atom(atom),
            _ => Formula::neg_atom(atom),
        };
    }
    match r.gen_range(0..7) {
        0 => Formula::Or(b(formula(r, d - 1)), b(formula(r, d - 1))),
        1 => Formula::And(b(formula(r, d - 1)), b(formula(r, d - 1))),
        2 => Formula::Next(b(formula(r, d - 1))),
        3 => Formula::Until(b(formula(r, d - 1)), b(formula(r, d - 1))),
        4 => Formula::WeakUntil(b(formula(r, d - 1)), b(formula(r, d - 1))),
        5 => Formula::Always(b(formula(r, d - 1))),
        _ => formula(r, 0),
    }
}

fn classical(r: &mut impl Rng, d: usize) -> C {
    let b = |f: C| Box::new(f);
    if d == 0 {
        return match r.gen_range(0..4) {
            0 => C::True,
            1 => C::False,
            _ => C::atom(["a", "b"].choose(r).unwrap()),
        };
    }
    match r.gen_range(0..9) {
        0 => C::Not(b(classical(r, d - 1))),
        1 => C::And(b(classical(r, d - 1)), b(classical(r, d - 1))),
        2 => C::Or(b(classical(r, d - 1)), b(classical(r, d - 1))),
        3 => C::Next(b(classical(r, d - 1))),
        4 => C::Until(b(classical(r, d - 1)), b(classical(r, d - 1))),
        5 => C::WeakUntil(b(classical(r, d - 1)), b(classical(r, d - 1))),
        6 => C::Always(b(classical(r, d - 1))),
        7 => C::Eventually(b(classical(r, d - 1))),
        _ => classical(r, 0),
    }
}

fn random_wts(r: &mut impl Rng) -> Wts {
    let ab = aps(&["control", "gather", "upload"]);
    let mut t = Wts::new(ab.clone());
    let n = r.gen_range(1..=5);
    for i in 0..n {
        t.add_state(format!("s{i}"), random_letter(r, &ab));
    }
    t.init = (0..n).filter(|_| r.gen_bool(0.4)).collect();
    for _ in 0..r.gen_range(0..8) {
        let w = ExtRat::frac(r.gen_range(1..20), r.gen_range(1..3));
        t.add_edge(r.gen_range(0..n), r.gen_range(0..n), w).unwrap();
    }
    t
}

#[test]
fn fixtures_print_to_a_fixpoint() {
    for name in ["aplus.ba", "aplusbplus.ba", "two_branch.wba", "robot.wba"] {
        let text = fixture(name);
        let once = match parse_automaton(&text).unwrap() {
            AutomatonFile::Buchi(b) => buchi_to_text(&b),
            AutomatonFile::Weighted(a) => wba_to_text(&a),
        };
        assert_eq!(parse_automaton(&once).unwrap(), parse_automaton(&text).unwrap(), "{name}");
    }
    let t = parse_wts(&fixture("robot.wts")).unwrap();
    assert_eq!(parse_wts(&wts_to_text(&t)).unwrap(), t);
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(parse_buchi("aps a\nstates p\ninitial q\n").is_err());
    assert!(parse_buchi("aps a\nstates p p\n").is_err());
    assert!(parse_buchi("aps a\nstates p\ntrans p {b} p\n").is_err());
    assert!(parse_buchi("aps a\nstates p\ntrans p {a} p 3\n").is_err());
    assert!(parse_wba("monoid k9\naps a\nstates p\n").is_err());
    assert!(parse_wba("aps a\nstates p\n").is_err());
    assert!(parse_wts("aps a\nstates p\n").is_err());
    assert!(parse_wts("wts\naps a\nstates p q\nedge p q 0\n").is_err());
    assert!(parse_wts("wts\naps a\nstates p\nlabel p {b}\n").is_err());
    assert!("{a} |".parse::<Lasso>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn formulas_round_trip(seed in any::<u64>()) {
        let f = formula(&mut rng(seed), 4);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn classical_formulas_round_trip(seed in any::<u64>()) {
        let f = classical(&mut rng(seed), 4);
        prop_assert_eq!(parse_classical(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn lassos_round_trip(seed in any::<u64>()) {
        let w = random_lasso(&mut rng(seed), &aps(&["a", "b", "c"]));
        prop_assert_eq!(w.to_string().parse::<Lasso>().unwrap(), w);
    }

    #[test]
    fn automata_round_trip(seed in any::<u64>(), mi in 0usize..3) {
        let mut r = rng(seed);
        let ab = aps(&["a", "b"]);
        let b = random_buchi(&mut r, 4, &ab);
        prop_assert_eq!(parse_buchi(&buchi_to_text(&b)).unwrap(), b);
        let a = random_wba(&mut r, Monoid::all()[mi], 4, &ab);
        prop_assert_eq!(parse_wba(&wba_to_text(&a)).unwrap(), a);
    }

    #[test]
    fn transition_systems_round_trip(seed in any::<u64>()) {
        let t = random_wts(&mut rng(seed));
        prop_assert_eq!(parse_wts(&wts_to_text(&t)).unwrap(), t);
    }
}
