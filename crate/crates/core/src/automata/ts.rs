use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semantics::{Lasso, Letter};

/// Letters are bitmasks over a sorted list of atomic propositions.
pub type Sym = u32;

pub const MAX_APS: usize = 16;

/// A transition structure: states, an alphabet of AP-subsets and a
/// successor relation stored densely per state and letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ts {
    pub aps: Vec<String>,
    pub names: Vec<String>,
    pub delta: Vec<Vec<Vec<usize>>>,
}

impl Ts {
    pub fn new(aps: impl IntoIterator<Item = String>) -> Result<Self> {
        let aps: Vec<String> = aps.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if aps.len() > MAX_APS {
            return Err(Error::Unsupported(format!("at most {MAX_APS} atomic propositions are supported")));
        }
        Ok(Ts { aps, names: Vec::new(), delta: Vec::new() })
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn num_letters(&self) -> usize {
        1 << self.aps.len()
    }

    pub fn add_state(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.delta.push(vec![Vec::new(); self.num_letters()]);
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, p: usize, a: Sym, q: usize) {
        let row = &mut self.delta[p][a as usize];
        if let Err(i) = row.binary_search(&q) {
            row.insert(i, q);
        }
    }

    pub fn succ(&self, p: usize, a: Sym) -> &[usize] {
        &self.delta[p][a as usize]
    }

    /// All successors of `p` over any letter.
    pub fn post(&self, p: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.delta[p].iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn edges(&self, p: usize) -> Vec<(Sym, usize)> {
        let mut v = Vec::new();
        for (a, qs) in self.delta[p].iter().enumerate() {
            v.extend(qs.iter().map(|&q| (a as Sym, q)));
        }
        v
    }

    pub fn letter(&self, a: Sym) -> Letter {
        self.aps.iter().enumerate().filter(|(i, _)| a >> i & 1 == 1).map(|(_, s)| s.clone()).collect()
    }

    /// The symbol of a letter, or `None` if it mentions propositions outside
    /// the alphabet (such letters have no transitions).
    pub fn sym(&self, l: &Letter) -> Option<Sym> {
        let mut a = 0;
        for p in l {
            let i = self.aps.binary_search(p).ok()?;
            a |= 1 << i;
        }
        Some(a)
    }

    /// The same structure over a larger proposition list; letters that use
    /// the new propositions get no transitions.
    pub fn widen(&self, aps: &[String]) -> Result<Ts> {
        let mut out = Ts::new(aps.iter().cloned())?;
        for p in &self.aps {
            if out.aps.binary_search(p).is_err() {
                return Err(Error::Malformed(format!("cannot drop proposition `{p}`")));
            }
        }
        for name in &self.names {
            out.add_state(name.clone());
        }
        for p in 0..self.num_states() {
            for (a, q) in self.edges(p) {
                let b = out.sym(&self.letter(a)).unwrap();
                out.add_edge(p, b, q);
            }
        }
        Ok(out)
    }

    /// Keeps only the states in `keep`, renumbered in order. Returns the new
    /// structure and the old-to-new index map.
    pub fn restrict(&self, keep: &[bool]) -> (Ts, Vec<Option<usize>>) {
        let mut map = vec![None; self.num_states()];
        let mut out = Ts { aps: self.aps.clone(), names: Vec::new(), delta: Vec::new() };
        for p in 0..self.num_states() {
            if keep[p] {
                map[p] = Some(out.add_state(self.names[p].clone()));
            }
        }
        for p in 0..self.num_states() {
            let Some(np) = map[p] else { continue };
            for (a, q) in self.edges(p) {
                if let Some(nq) = map[q] {
                    out.add_edge(np, a, nq);
                }
            }
        }
        (out, map)
    }

    /// The product graph of the structure with the positions of a lasso:
    /// node `q * positions + i` stands for state `q` at position `i`.
    pub fn lasso_product(&self, w: &Lasso) -> LassoProduct<'_> {
        let syms = (0..w.positions()).map(|i| self.sym(w.at(i))).collect();
        LassoProduct { ts: self, syms, next: (0..w.positions()).map(|i| w.next(i)).collect() }
    }
}

pub struct LassoProduct<'a> {
    ts: &'a Ts,
    syms: Vec<Option<Sym>>,
    next: Vec<usize>,
}

impl LassoProduct<'_> {
    pub fn positions(&self) -> usize {
        self.syms.len()
    }

    pub fn len(&self) -> usize {
        self.ts.num_states() * self.positions()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn node(&self, q: usize, i: usize) -> usize {
        q * self.positions() + i
    }

    pub fn state(&self, node: usize) -> usize {
        node / self.positions()
    }

    pub fn succ(&self, node: usize) -> Vec<usize> {
        let (q, i) = (node / self.positions(), node % self.positions());
        match self.syms[i] {
            None => Vec::new(),
            Some(a) => self.ts.succ(q, a).iter().map(|&q2| self.node(q2, self.next[i])).collect(),
        }
    }
}
