//! Inputs shared by the benchmarks in `benches/`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wltl_core::automata::Buchi;
use wltl_core::io::{parse_buchi, parse_wts};
use wltl_core::logic::parse_formula;
use wltl_core::translate::wts_to_wba;
use wltl_core::{ExtRat, Formula, Lasso, Monoid, Wba};

pub fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn robot() -> (Formula, Wba) {
    let f = parse_formula(&fixture("robot.wltl")).expect("robot formula parses");
    let a = wts_to_wba(&parse_wts(&fixture("robot.wts")).expect("robot system parses")).expect("robot system translates");
    (f, a)
}

pub fn buchi(name: &str) -> Buchi {
    parse_buchi(&fixture(name)).expect("fixture parses")
}

pub fn lasso(s: &str) -> Lasso {
    s.parse().expect("lasso parses")
}

/// A random weighted automaton over `a`, `b`, fixed by `seed`.
pub fn random_wba(seed: u64, m: Monoid, n: usize) -> Wba {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Wba::new(m, ["a".to_string(), "b".to_string()]).expect("two propositions");
    for i in 0..n {
        a.add_state(format!("q{i}"), r.gen_bool(0.4));
    }
    for p in 0..n {
        for s in 0..4 {
            for q in 0..n {
                if r.gen_bool(0.3) {
                    let w = if r.gen_bool(0.2) { ExtRat::PosInf } else { ExtRat::int(r.gen_range(1..6)) };
                    a.set_weight(p, s, q, w);
                }
            }
        }
    }
    a.init.push(0);
    a
}

/// A random Büchi automaton over `a`, `b`, fixed by `seed`.
pub fn random_buchi(seed: u64, n: usize) -> Buchi {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut b = Buchi::new(["a".to_string(), "b".to_string()]).expect("two propositions");
    for i in 0..n {
        b.add_state(format!("q{i}"), r.gen_bool(0.4));
    }
    for p in 0..n {
        for s in 0..4 {
            for q in 0..n {
                if r.gen_bool(0.3) {
                    b.ts.add_edge(p, s, q);
                }
            }
        }
    }
    b.init.push(0);
    b
}
