//! Language inclusion between Büchi automata.
//!
//! `L(A) ⊆ L(B)` fails iff some lasso `u v^ω` is accepted by `A` and
//! rejected by `B`. Whether `B` accepts `u v^ω` depends only on the set of
//! `B`-states reachable over `u` and on the transition profile of `v` (for
//! every pair of states: is there a path, and does one visit a final
//! state). The search enumerates `A`-prefixes paired with `B`-subsets and
//! `A`-loops paired with `B`-profiles, keeping only minimal elements: fewer
//! `B`-paths can only make rejection easier, so dominated elements never
//! lead to a counterexample that a minimal one misses. This is the
//! congruence underlying Büchi's original complementation, explored lazily
//! instead of building the complement automaton. Both sides are first
//! reduced by direct simulation, and a simulation of every initial state
//! settles inclusion without any search.

use std::collections::HashMap;

use super::buchi::Buchi;
use super::complement::{buchi_complement, ComplementLimits};
use super::graph::scc;
use super::simulation::{direct_simulation, reduce};
use super::ts::Sym;
use crate::error::{Error, Result};
use crate::semantics::Lasso;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn or_assign(&mut self, o: &Bits) {
        self.0.iter_mut().zip(&o.0).for_each(|(a, b)| *a |= b);
    }

    fn subset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    fn intersects(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).any(|(a, b)| a & b != 0)
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// Transition profile of a finite word over `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Profile {
    reach: Vec<Bits>,
    acc: Vec<Bits>,
}

impl Profile {
    fn letter(b: &Buchi, a: Sym) -> Profile {
        let n = b.num_states();
        let mut reach = vec![Bits::new(n); n];
        let mut acc = vec![Bits::new(n); n];
        for p in 0..n {
            for &q in b.ts.succ(p, a) {
                reach[p].set(q);
                if b.fin[q] {
                    acc[p].set(q);
                }
            }
        }
        Profile { reach, acc }
    }

    fn then(&self, o: &Profile) -> Profile {
        let n = self.reach.len();
        let mut reach = vec![Bits::new(n); n];
        let mut acc = vec![Bits::new(n); n];
        for p in 0..n {
            for q in self.reach[p].ones() {
                reach[p].or_assign(&o.reach[q]);
                acc[p].or_assign(&o.acc[q]);
            }
            for q in self.acc[p].ones() {
                acc[p].or_assign(&o.reach[q]);
            }
        }
        Profile { reach, acc }
    }

    fn le(&self, o: &Profile) -> bool {
        self.reach.iter().zip(&o.reach).all(|(a, b)| a.subset_of(b))
            && self.acc.iter().zip(&o.acc).all(|(a, b)| a.subset_of(b))
    }

    /// States from which `v^ω` has an accepting run, `v` being the word of
    /// this profile.
    fn accepting_from(&self) -> Bits {
        let n = self.reach.len();
        let succ = |p: usize| self.reach[p].ones().collect::<Vec<_>>();
        let (comp, ncomp) = scc(n, &succ);
        // Components come in reverse topological order, so successors of a
        // component are settled before it.
        let mut members = vec![Vec::new(); ncomp];
        (0..n).for_each(|p| members[comp[p]].push(p));
        let mut comp_good = vec![false; ncomp];
        for c in 0..ncomp {
            comp_good[c] = members[c].iter().any(|&p| {
                self.acc[p].ones().any(|q| comp[q] == c) || self.reach[p].ones().any(|q| comp[q] != c && comp_good[comp[q]])
            });
        }
        let mut out = Bits::new(n);
        for p in 0..n {
            if comp_good[comp[p]] {
                out.set(p);
            }
        }
        out
    }
}

/// Options for [`buchi_inclusion_with`].
#[derive(Clone, Copy, Debug)]
pub struct InclusionLimits {
    /// Upper bound on stored prefix and loop elements.
    pub max_elements: usize,
}

impl Default for InclusionLimits {
    fn default() -> Self {
        InclusionLimits { max_elements: 2_000_000 }
    }
}

/// `None` if `L(a) ⊆ L(b)`, otherwise a lasso accepted by `a` and rejected by `b`.
pub fn buchi_inclusion(a: &Buchi, b: &Buchi) -> Result<Option<Lasso>> {
    buchi_inclusion_with(a, b, InclusionLimits::default())
}

struct Antichain<T> {
    items: Vec<(T, Vec<Sym>, bool)>,
}

impl<T> Antichain<T> {
    fn new() -> Self {
        Antichain { items: Vec::new() }
    }

    /// Inserts unless dominated; drops elements the new one dominates.
    /// `below(x, y)` means `x` is at least as useful as `y`.
    fn insert(&mut self, t: T, word: Vec<Sym>, below: &dyn Fn(&T, &T) -> bool) -> Option<usize> {
        if self.items.iter().any(|(u, _, alive)| *alive && below(u, &t)) {
            return None;
        }
        for item in self.items.iter_mut() {
            if item.2 && below(&t, &item.0) {
                item.2 = false;
            }
        }
        self.items.push((t, word, true));
        Some(self.items.len() - 1)
    }
}

pub fn buchi_inclusion_with(a: &Buchi, b: &Buchi, limits: InclusionLimits) -> Result<Option<Lasso>> {
    let (a, b) = Buchi::align(a, b)?;
    let a = reduce(&a);
    let b = reduce(&b);
    if a.init.is_empty() {
        return Ok(None);
    }
    if b.init.is_empty() {
        return Ok(a.find_accepted());
    }
    if simulated(&a, &b)? {
        return Ok(None);
    }
    let letters = a.ts.num_letters() as Sym;
    let nb = b.num_states();
    let na = a.num_states();
    let word = |syms: &[Sym]| syms.iter().map(|&s| a.ts.letter(s)).collect::<Vec<_>>();
    let budget = |used: usize| {
        if used > limits.max_elements {
            Err(Error::CapExceeded { what: "inclusion search".into(), needed: used, cap: limits.max_elements })
        } else {
            Ok(())
        }
    };

    // Prefixes: A-state paired with the B-subset reached on the same word.
    let mut start = Bits::new(nb);
    b.init.iter().for_each(|&q| start.set(q));
    let mut prefixes: Vec<Antichain<Bits>> = (0..na).map(|_| Antichain::new()).collect();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let subset_le = |x: &Bits, y: &Bits| x.subset_of(y);
    for &x in &a.init {
        if let Some(i) = prefixes[x].insert(start.clone(), Vec::new(), &subset_le) {
            queue.push((x, i));
        }
    }
    let mut used = 0;
    let mut head = 0;
    while head < queue.len() {
        let (x, i) = queue[head];
        head += 1;
        if !prefixes[x].items[i].2 {
            continue;
        }
        let (r, w) = (prefixes[x].items[i].0.clone(), prefixes[x].items[i].1.clone());
        for s in 0..letters {
            let mut r2 = Bits::new(nb);
            for q in r.ones() {
                b.ts.succ(q, s).iter().for_each(|&q2| r2.set(q2));
            }
            for &x2 in a.ts.succ(x, s) {
                let mut w2 = w.clone();
                w2.push(s);
                if let Some(j) = prefixes[x2].insert(r2.clone(), w2, &subset_le) {
                    queue.push((x2, j));
                    used += 1;
                    budget(used)?;
                }
            }
        }
    }

    // Loops: for every A-state on an accepting cycle, the B-profiles of
    // words looping back to it through a final state.
    let post = |p: usize| a.ts.post(p);
    let (comp, _) = scc(na, &post);
    let letter_profiles: Vec<Profile> = (0..letters).map(|s| Profile::letter(&b, s)).collect();
    let mut profile_cache: HashMap<Profile, Bits> = HashMap::new();
    for x in 0..na {
        if prefixes[x].items.iter().all(|it| !it.2) {
            continue;
        }
        let c = comp[x];
        let in_comp: Vec<bool> = (0..na).map(|p| comp[p] == c).collect();
        if !(0..na).any(|p| in_comp[p] && a.fin[p]) || !post(x).iter().any(|&q| in_comp[q]) {
            continue;
        }
        // Elements keyed by (A-state, final-seen flag).
        let mut loops: HashMap<(usize, bool), Antichain<Profile>> = HashMap::new();
        let mut queue: Vec<(usize, bool, usize)> = Vec::new();
        let dominates = |p: &Profile, q: &Profile| p.le(q);
        let push = |loops: &mut HashMap<(usize, bool), Antichain<Profile>>,
                        queue: &mut Vec<(usize, bool, usize)>,
                        y: usize,
                        f: bool,
                        g: Profile,
                        w: Vec<Sym>|
         -> bool {
            // A flagged element dominates an unflagged one with a larger profile.
            if loops.get(&(y, true)).is_some_and(|ac| ac.items.iter().any(|(u, _, al)| *al && u.le(&g))) {
                return false;
            }
            if !f {
                if let Some(ac) = loops.get_mut(&(y, false)) {
                    if let Some(i) = ac.insert(g, w, &dominates) {
                        queue.push((y, f, i));
                        return true;
                    }
                    return false;
                }
            } else if let Some(ac) = loops.get_mut(&(y, false)) {
                for it in ac.items.iter_mut() {
                    if it.2 && g.le(&it.0) {
                        it.2 = false;
                    }
                }
            }
            let ac = loops.entry((y, f)).or_insert_with(Antichain::new);
            if let Some(i) = ac.insert(g, w, &dominates) {
                queue.push((y, f, i));
                true
            } else {
                false
            }
        };
        for s in 0..letters {
            for &y in a.ts.succ(x, s) {
                if in_comp[y] && push(&mut loops, &mut queue, y, a.fin[y], letter_profiles[s as usize].clone(), vec![s]) {
                    used += 1;
                }
            }
        }
        let mut head = 0;
        while head < queue.len() {
            budget(used)?;
            let (y, f, i) = queue[head];
            head += 1;
            let (g, w, alive) = loops[&(y, f)].items[i].clone();
            if !alive {
                continue;
            }
            if y == x && f {
                let good = profile_cache.entry(g.clone()).or_insert_with(|| g.accepting_from()).clone();
                for (r, u, al) in &prefixes[x].items {
                    if *al && !r.intersects(&good) {
                        return Ok(Some(Lasso::new(word(u), word(&w))));
                    }
                }
            }
            for s in 0..letters {
                let succs: Vec<usize> = a.ts.succ(y, s).iter().copied().filter(|&y2| in_comp[y2]).collect();
                if succs.is_empty() {
                    continue;
                }
                let g2 = g.then(&letter_profiles[s as usize]);
                for y2 in succs {
                    let mut w2 = w.clone();
                    w2.push(s);
                    if push(&mut loops, &mut queue, y2, f || a.fin[y2], g2.clone(), w2) {
                        used += 1;
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Every initial state of `a` is directly simulated by one of `b`, which
/// implies inclusion.
fn simulated(a: &Buchi, b: &Buchi) -> Result<bool> {
    let sim = direct_simulation(&Buchi::union(a, b)?);
    let off = a.num_states();
    Ok(a.init.iter().all(|&x| b.init.iter().any(|&y| sim[x][off + y])))
}

/// Inclusion through an explicit rank-based complement; only practical for
/// small right-hand sides.
pub fn buchi_inclusion_via_complement(a: &Buchi, b: &Buchi, limits: ComplementLimits) -> Result<Option<Lasso>> {
    let (a, b) = Buchi::align(a, b)?;
    let nb = buchi_complement(&b, limits)?;
    Ok(Buchi::intersect(&a, &nb)?.find_accepted())
}
