use std::collections::BTreeSet;

use super::graph::{bfs_path, reachable, scc, Explorer};
use super::ts::{Sym, Ts};
use crate::error::Result;
use crate::semantics::Lasso;

/// A nondeterministic Büchi automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Buchi {
    pub ts: Ts,
    pub init: Vec<usize>,
    pub fin: Vec<bool>,
}

/// Is there a non-trivial SCC, reachable from `starts` inside `allowed`,
/// that meets every set in `visits`? Nodes outside `allowed` may still be
/// used on the way there.
pub(crate) fn fair_cycle_exists(
    n: usize,
    starts: &[usize],
    succ: &dyn Fn(usize) -> Vec<usize>,
    allowed: &dyn Fn(usize) -> bool,
    visits: &[&dyn Fn(usize) -> bool],
) -> bool {
    let reach = reachable(n, starts, succ);
    let inside = |v: usize| reach[v] && allowed(v);
    let inner = |v: usize| if inside(v) { succ(v).into_iter().filter(|&w| inside(w)).collect() } else { Vec::new() };
    let (comp, ncomp) = scc(n, &inner);
    let mut size = vec![0usize; ncomp];
    let mut looped = vec![false; ncomp];
    let mut hits = vec![vec![false; visits.len()]; ncomp];
    for v in (0..n).filter(|&v| inside(v)) {
        let c = comp[v];
        size[c] += 1;
        if inner(v).contains(&v) {
            looped[c] = true;
        }
        for (j, f) in visits.iter().enumerate() {
            if f(v) {
                hits[c][j] = true;
            }
        }
    }
    (0..ncomp).any(|c| (size[c] > 1 || looped[c]) && hits[c].iter().all(|&h| h))
}

impl Buchi {
    pub fn new(aps: impl IntoIterator<Item = String>) -> Result<Self> {
        Ok(Buchi { ts: Ts::new(aps)?, init: Vec::new(), fin: Vec::new() })
    }

    pub fn add_state(&mut self, name: impl Into<String>, is_final: bool) -> usize {
        self.fin.push(is_final);
        self.ts.add_state(name)
    }

    pub fn num_states(&self) -> usize {
        self.ts.num_states()
    }

    pub fn aps(&self) -> &[String] {
        &self.ts.aps
    }

    /// The automaton accepting every word over `aps`.
    pub fn universal(aps: impl IntoIterator<Item = String>) -> Result<Self> {
        let mut b = Buchi::new(aps)?;
        let q = b.add_state("all", true);
        b.init.push(q);
        for a in 0..b.ts.num_letters() {
            b.ts.add_edge(q, a as Sym, q);
        }
        Ok(b)
    }

    pub fn empty(aps: impl IntoIterator<Item = String>) -> Result<Self> {
        Buchi::new(aps)
    }

    /// Membership of an ultimately periodic word.
    pub fn accepts(&self, w: &Lasso) -> bool {
        let prod = self.ts.lasso_product(w);
        let starts: Vec<usize> = self.init.iter().map(|&q| prod.node(q, 0)).collect();
        fair_cycle_exists(prod.len(), &starts, &|v| prod.succ(v), &|_| true, &[&|v| self.fin[prod.state(v)]])
    }

    /// `None` when the language is empty, otherwise an accepted lasso.
    pub fn find_accepted(&self) -> Option<Lasso> {
        let n = self.num_states();
        let post = |p: usize| self.ts.post(p);
        let reach = reachable(n, &self.init, &post);
        let inner = |p: usize| if reach[p] { post(p) } else { Vec::new() };
        let (comp, _) = scc(n, &inner);
        let target = (0..n).find(|&f| {
            reach[f] && self.fin[f] && post(f).iter().any(|&q| comp[q] == comp[f])
        })?;
        let edges = |p: usize| self.ts.edges(p);
        let stem = bfs_path(n, &self.init, &edges, &|p| p == target, false)?;
        let c = comp[target];
        let in_comp = |p: usize| self.ts.edges(p).into_iter().filter(|&(_, q)| comp[q] == c).collect();
        let cycle = bfs_path(n, &[target], &in_comp, &|p| p == target, true)?;
        let word = |path: Vec<(usize, Sym, usize)>| path.into_iter().map(|(_, a, _)| self.ts.letter(a)).collect();
        Some(Lasso::new(word(stem), word(cycle)))
    }

    pub fn is_empty(&self) -> bool {
        self.find_accepted().is_none()
    }

    /// States from which some accepting run exists.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let post = |p: usize| self.ts.post(p);
        let (comp, ncomp) = scc(n, &post);
        let mut good = vec![false; ncomp];
        for p in 0..n {
            if self.fin[p] && post(p).iter().any(|&q| comp[q] == comp[p]) {
                good[comp[p]] = true;
            }
        }
        let mut pred = vec![Vec::new(); n];
        for p in 0..n {
            for q in post(p) {
                pred[q].push(p);
            }
        }
        let starts: Vec<usize> = (0..n).filter(|&p| good[comp[p]]).collect();
        reachable(n, &starts, &|q| pred[q].clone())
    }

    /// Drops states that are unreachable or from which nothing is accepted.
    pub fn trim(&self) -> Buchi {
        let n = self.num_states();
        let reach = reachable(n, &self.init, &|p| self.ts.post(p));
        let live = self.live_states();
        let keep: Vec<bool> = (0..n).map(|p| reach[p] && live[p]).collect();
        self.restrict(&keep)
    }

    pub fn restrict(&self, keep: &[bool]) -> Buchi {
        let (ts, map) = self.ts.restrict(keep);
        let mut fin = vec![false; ts.num_states()];
        for (p, m) in map.iter().enumerate() {
            if let Some(np) = m {
                fin[*np] = self.fin[p];
            }
        }
        let init = self.init.iter().filter_map(|&p| map[p]).collect();
        Buchi { ts, init, fin }
    }

    /// The same automaton over a larger proposition list.
    pub fn widen(&self, aps: &[String]) -> Result<Buchi> {
        Ok(Buchi { ts: self.ts.widen(aps)?, init: self.init.clone(), fin: self.fin.clone() })
    }

    /// Both automata over the union of their propositions.
    pub fn align(a: &Buchi, b: &Buchi) -> Result<(Buchi, Buchi)> {
        let aps: Vec<String> = a.aps().iter().chain(b.aps()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        Ok((a.widen(&aps)?, b.widen(&aps)?))
    }

    /// Disjoint union.
    pub fn union(a: &Buchi, b: &Buchi) -> Result<Buchi> {
        let (a, b) = Buchi::align(a, b)?;
        let mut out = a.clone();
        let off = a.num_states();
        for p in 0..b.num_states() {
            out.add_state(b.ts.names[p].clone(), b.fin[p]);
        }
        for p in 0..b.num_states() {
            for (s, q) in b.ts.edges(p) {
                out.ts.add_edge(off + p, s, off + q);
            }
        }
        out.init.extend(b.init.iter().map(|&p| off + p));
        Ok(out)
    }

    /// Synchronous product with a two-phase flag that alternates between
    /// waiting for a final state of `a` and one of `b`.
    pub fn intersect(a: &Buchi, b: &Buchi) -> Result<Buchi> {
        let (a, b) = Buchi::align(a, b)?;
        let mut out = Buchi::new(a.aps().to_vec())?;
        let mut ex: Explorer<(usize, usize, u8)> = Explorer::new();
        let add = |out: &mut Buchi, ex: &mut Explorer<(usize, usize, u8)>, k: (usize, usize, u8)| {
            let (id, new) = ex.id(k);
            if new {
                let name = format!("{}*{}#{}", a.ts.names[k.0], b.ts.names[k.1], k.2);
                out.add_state(name, k.2 == 0 && a.fin[k.0]);
            }
            id
        };
        for &p in &a.init {
            for &q in &b.init {
                let id = add(&mut out, &mut ex, (p, q, 0));
                out.init.push(id);
            }
        }
        let mut i = 0;
        while i < ex.len() {
            let (p, q, f) = ex.keys[i];
            let g = match f {
                0 if a.fin[p] => 1,
                1 if b.fin[q] => 0,
                _ => f,
            };
            for s in 0..a.ts.num_letters() as Sym {
                for &p2 in a.ts.succ(p, s) {
                    for &q2 in b.ts.succ(q, s) {
                        let dst = add(&mut out, &mut ex, (p2, q2, g));
                        out.ts.add_edge(i, s, dst);
                    }
                }
            }
            i += 1;
        }
        Ok(out)
    }
}
