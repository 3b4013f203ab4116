//! Muller and Rabin automata and their conversion to Büchi automata.

use super::buchi::{fair_cycle_exists, Buchi};
use super::ts::{Sym, Ts};
use crate::semantics::Lasso;

/// A Muller automaton with structural acceptance: a run is accepting iff
/// its infinity set meets `f1` and `f2` and is contained in `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Muller {
    pub ts: Ts,
    pub init: usize,
    pub f1: Vec<bool>,
    pub f2: Vec<bool>,
    pub s: Vec<bool>,
}

impl Muller {
    /// Membership by inspecting infinity sets on the lasso product directly.
    pub fn accepts(&self, w: &Lasso) -> bool {
        let prod = self.ts.lasso_product(w);
        fair_cycle_exists(
            prod.len(),
            &[prod.node(self.init, 0)],
            &|v| prod.succ(v),
            &|v| self.s[prod.state(v)],
            &[&|v| self.f1[prod.state(v)], &|v| self.f2[prod.state(v)]],
        )
    }
}

/// One Rabin condition: the infinity set avoids `avoid` and meets every set
/// in `visit`. A single `visit` set is the classical Rabin pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RabinPair {
    pub avoid: Vec<bool>,
    pub visit: Vec<Vec<bool>>,
}

/// A Rabin automaton: accepting iff some pair is satisfied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rabin {
    pub ts: Ts,
    pub init: usize,
    pub pairs: Vec<RabinPair>,
}

impl Rabin {
    pub fn accepts(&self, w: &Lasso) -> bool {
        let prod = self.ts.lasso_product(w);
        self.pairs.iter().any(|pair| {
            let visits: Vec<Box<dyn Fn(usize) -> bool + '_>> =
                pair.visit.iter().map(|u| Box::new(|v| u[prod.state(v)]) as Box<dyn Fn(usize) -> bool>).collect();
            let refs: Vec<&dyn Fn(usize) -> bool> = visits.iter().map(|b| b.as_ref()).collect();
            fair_cycle_exists(
                prod.len(),
                &[prod.node(self.init, 0)],
                &|v| prod.succ(v),
                &|v| !pair.avoid[prod.state(v)],
                &refs,
            )
        })
    }
}

/// A free copy of `ts` plus, per condition, a copy restricted to `allowed`
/// that cycles through `visit` with a round-robin counter. The automaton
/// jumps nondeterministically from the free copy into a restricted one.
fn guess_suffix(ts: &Ts, init: usize, conds: &[(&[bool], &[Vec<bool>])]) -> Buchi {
    let n = ts.num_states();
    let mut b = Buchi { ts: Ts { aps: ts.aps.clone(), names: Vec::new(), delta: Vec::new() }, init: vec![init], fin: Vec::new() };
    for p in 0..n {
        b.add_state(ts.names[p].clone(), false);
    }
    for p in 0..n {
        for (a, q) in ts.edges(p) {
            b.ts.add_edge(p, a, q);
        }
    }
    for (j, (allowed, visit)) in conds.iter().enumerate() {
        let m = visit.len().max(1);
        let mut id = vec![vec![usize::MAX; m]; n];
        for p in (0..n).filter(|&p| allowed[p]) {
            for (i, slot) in id[p].iter_mut().enumerate() {
                let accepting = i == 0 && visit.first().is_none_or(|u| u[p]);
                *slot = b.add_state(format!("{}@{j}.{i}", ts.names[p]), accepting);
            }
        }
        let step = |p: usize, i: usize| if visit.is_empty() || !visit[i][p] { i } else { (i + 1) % m };
        if allowed[init] {
            b.init.push(id[init][0]);
        }
        for p in 0..n {
            for (a, q) in ts.edges(p) {
                if !allowed[q] {
                    continue;
                }
                b.ts.add_edge(p, a as Sym, id[q][0]);
                if allowed[p] {
                    for i in 0..m {
                        b.ts.add_edge(id[p][i], a, id[q][step(p, i)]);
                    }
                }
            }
        }
    }
    b
}

pub fn muller_to_buchi(m: &Muller) -> Buchi {
    let visit = vec![m.f1.clone(), m.f2.clone()];
    guess_suffix(&m.ts, m.init, &[(&m.s, &visit)])
}

pub fn rabin_to_buchi(r: &Rabin) -> Buchi {
    let allowed: Vec<Vec<bool>> = r.pairs.iter().map(|p| p.avoid.iter().map(|x| !x).collect()).collect();
    let conds: Vec<(&[bool], &[Vec<bool>])> =
        r.pairs.iter().zip(&allowed).map(|(p, a)| (a.as_slice(), p.visit.as_slice())).collect();
    guess_suffix(&r.ts, r.init, &conds)
}
