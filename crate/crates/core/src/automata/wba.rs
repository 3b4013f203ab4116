use std::collections::{BTreeMap, BTreeSet};

use super::buchi::Buchi;
use super::ts::{Sym, Ts};
use crate::error::{Error, Result};
use crate::monoid::{ExtRat, Monoid};
use crate::semantics::Lasso;

/// A weighted Büchi automaton over one of the extended-rational monoids.
/// Transitions absent from `wt` carry the zero `-inf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wba {
    pub monoid: Monoid,
    pub ts: Ts,
    pub wt: BTreeMap<(usize, Sym, usize), ExtRat>,
    pub init: Vec<usize>,
    pub fin: Vec<bool>,
}

impl Wba {
    pub fn new(monoid: Monoid, aps: impl IntoIterator<Item = String>) -> Result<Self> {
        Ok(Wba { monoid, ts: Ts::new(aps)?, wt: BTreeMap::new(), init: Vec::new(), fin: Vec::new() })
    }

    pub fn aps(&self) -> &[String] {
        &self.ts.aps
    }

    pub fn num_states(&self) -> usize {
        self.ts.num_states()
    }

    pub fn add_state(&mut self, name: impl Into<String>, is_final: bool) -> usize {
        self.fin.push(is_final);
        self.ts.add_state(name)
    }

    /// Sets the weight of a transition. Setting `-inf` removes it.
    pub fn set_weight(&mut self, p: usize, a: Sym, q: usize, w: ExtRat) {
        if w.is_neg_inf() {
            if self.wt.remove(&(p, a, q)).is_some() {
                self.ts.delta[p][a as usize].retain(|&x| x != q);
            }
            return;
        }
        self.ts.add_edge(p, a, q);
        self.wt.insert((p, a, q), w);
    }

    pub fn weight(&self, p: usize, a: Sym, q: usize) -> ExtRat {
        self.wt.get(&(p, a, q)).cloned().unwrap_or(ExtRat::NegInf)
    }

    /// Outgoing transitions of `p` on `a` with their weights.
    pub fn succ(&self, p: usize, a: Sym) -> impl Iterator<Item = (usize, &ExtRat)> + '_ {
        self.ts.succ(p, a).iter().map(move |&q| (q, &self.wt[&(p, a, q)]))
    }

    /// The weights that occur on transitions, in increasing order.
    pub fn image(&self) -> Vec<ExtRat> {
        self.wt.values().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn is_normalized(&self) -> bool {
        self.init.len() == 1
    }

    /// The unweighted automaton of all transitions with nonzero weight.
    pub fn support(&self) -> Buchi {
        Buchi { ts: self.ts.clone(), init: self.init.clone(), fin: self.fin.clone() }
    }

    /// The same automaton over a larger proposition list.
    pub fn widen(&self, aps: &[String]) -> Result<Wba> {
        let ts = self.ts.widen(aps)?;
        let wt = self
            .wt
            .iter()
            .map(|(&(p, a, q), w)| ((p, ts.sym(&self.ts.letter(a)).unwrap(), q), w.clone()))
            .collect();
        Ok(Wba { monoid: self.monoid, ts, wt, init: self.init.clone(), fin: self.fin.clone() })
    }

    /// The same automaton read over another monoid.
    pub fn with_monoid(&self, monoid: Monoid) -> Wba {
        Wba { monoid, ..self.clone() }
    }

    /// Keeps the states reachable from the initial ones.
    pub fn reachable_part(&self) -> Wba {
        let keep = super::graph::reachable(self.num_states(), &self.init, &|p| self.ts.post(p));
        let (ts, map) = self.ts.restrict(&keep);
        let mut out = Wba { monoid: self.monoid, ts, wt: BTreeMap::new(), init: Vec::new(), fin: Vec::new() };
        out.fin = (0..out.num_states()).map(|_| false).collect();
        for (p, m) in map.iter().enumerate() {
            if let Some(np) = m {
                out.fin[*np] = self.fin[p];
            }
        }
        for (&(p, a, q), w) in &self.wt {
            if let (Some(np), Some(nq)) = (map[p], map[q]) {
                out.wt.insert((np, a, nq), w.clone());
            }
        }
        out.init = self.init.iter().filter_map(|&p| map[p]).collect();
        out
    }

    /// Disjoint union; the behavior is the pointwise maximum.
    pub fn union(a: &Wba, b: &Wba) -> Result<Wba> {
        if a.monoid != b.monoid {
            return Err(Error::MonoidMismatch(format!("{} vs {}", a.monoid, b.monoid)));
        }
        let aps: Vec<String> = a.aps().iter().chain(b.aps()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let (a, b) = (a.widen(&aps)?, b.widen(&aps)?);
        let mut out = a.clone();
        let off = a.num_states();
        for p in 0..b.num_states() {
            out.add_state(b.ts.names[p].clone(), b.fin[p]);
        }
        for (&(p, s, q), w) in &b.wt {
            out.set_weight(off + p, s, off + q, w.clone());
        }
        out.init.extend(b.init.iter().map(|&p| off + p));
        Ok(out)
    }
}

/// An equivalent automaton with a single initial state: a fresh initial
/// state takes over the first step of every initial state, with ordinary
/// first weights merged by `max` and `+inf` first steps redirected into a
/// copy of the automaton.
pub fn normalize_wba(a: &Wba) -> Wba {
    let n = a.num_states();
    let mut out = Wba { monoid: a.monoid, ts: Ts { aps: a.ts.aps.clone(), names: Vec::new(), delta: Vec::new() }, wt: BTreeMap::new(), init: Vec::new(), fin: Vec::new() };
    for p in 0..n {
        out.add_state(a.ts.names[p].clone(), a.fin[p]);
    }
    for p in 0..n {
        out.add_state(format!("s_{}", a.ts.names[p]), a.fin[p]);
    }
    let q0 = out.add_state("q0", false);
    out.init.push(q0);
    for (&(p, s, q), w) in &a.wt {
        out.set_weight(p, s, q, w.clone());
        out.set_weight(n + p, s, n + q, w.clone());
    }
    let mut first: BTreeMap<(Sym, usize), ExtRat> = BTreeMap::new();
    for &p in &a.init {
        for s in 0..a.ts.num_letters() as Sym {
            for (q, w) in a.succ(p, s) {
                if w.is_pos_inf() {
                    out.set_weight(q0, s, n + q, ExtRat::PosInf);
                } else {
                    let e = first.entry((s, q)).or_insert(ExtRat::NegInf);
                    *e = e.clone().max(w.clone());
                }
            }
        }
    }
    for ((s, q), w) in first {
        out.set_weight(q0, s, q, w);
    }
    out
}

/// Behavior of a weighted automaton on a lasso.
pub fn wba_behavior(a: &Wba, w: &Lasso) -> Result<ExtRat> {
    Ok(crate::translate::ThresholdFamily::new(a)?.behavior(w))
}
