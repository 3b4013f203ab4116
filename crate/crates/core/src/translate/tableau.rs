//! Tableau translation of classical LTL into Büchi automata.
//!
//! Nodes are fully expanded covers of a set of obligations: the literals
//! that must hold now, the obligations for the next position, and the
//! eventualities (`U`, `F`) that were postponed. Acceptance is generalized
//! (one set per eventuality, containing the nodes that do not postpone it)
//! and then degeneralized with a round-robin counter.

use std::collections::{BTreeSet, HashMap};

use crate::automata::{Buchi, Explorer, Sym};
use crate::error::{Error, Result};
use crate::logic::{nnf, ClassicalFormula as C};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Node {
    pos: u32,
    neg: u32,
    next: BTreeSet<C>,
    /// Bit `i` set when eventuality `i` is not postponed.
    good: u64,
}

struct Tableau<'a> {
    aps: &'a [String],
    eventualities: Vec<C>,
    covers: HashMap<BTreeSet<C>, Vec<Node>>,
}

impl Tableau<'_> {
    fn ap(&self, a: &str) -> Result<u32> {
        self.aps
            .binary_search_by(|x| x.as_str().cmp(a))
            .map(|i| 1 << i)
            .map_err(|_| Error::Malformed(format!("proposition `{a}` is not in the alphabet")))
    }

    fn eventuality(&self, f: &C) -> u64 {
        1 << self.eventualities.iter().position(|e| e == f).unwrap()
    }

    fn covers(&mut self, obligations: &BTreeSet<C>) -> Result<Vec<Node>> {
        if let Some(c) = self.covers.get(obligations) {
            return Ok(c.clone());
        }
        let all_good = if self.eventualities.len() == 64 { u64::MAX } else { (1u64 << self.eventualities.len()) - 1 };
        let mut out = Vec::new();
        let start = Node { pos: 0, neg: 0, next: BTreeSet::new(), good: all_good };
        self.expand(obligations.iter().cloned().collect(), start, &mut out)?;
        out.sort_by(|a, b| (a.pos, a.neg, &a.next, a.good).cmp(&(b.pos, b.neg, &b.next, b.good)));
        out.dedup();
        self.covers.insert(obligations.clone(), out.clone());
        Ok(out)
    }

    fn expand(&self, mut todo: Vec<C>, mut node: Node, out: &mut Vec<Node>) -> Result<()> {
        while let Some(f) = todo.pop() {
            match f {
                C::True => {}
                C::False => return Ok(()),
                C::Atom(a) => node.pos |= self.ap(&a)?,
                C::Not(a) => match *a {
                    C::Atom(a) => node.neg |= self.ap(&a)?,
                    other => return Err(Error::Malformed(format!("not in negation normal form: !{other}"))),
                },
                C::And(a, b) => {
                    todo.push(*a);
                    todo.push(*b);
                }
                C::Or(a, b) => {
                    let mut left = todo.clone();
                    left.push(*a);
                    self.expand(left, node.clone(), out)?;
                    todo.push(*b);
                }
                C::Next(a) => {
                    node.next.insert(*a);
                }
                C::Until(ref a, ref b) => {
                    let mut now = todo.clone();
                    now.push((**b).clone());
                    self.expand(now, node.clone(), out)?;
                    node.good &= !self.eventuality(&f);
                    todo.push((**a).clone());
                    node.next.insert(f.clone());
                }
                C::Eventually(ref a) => {
                    let mut now = todo.clone();
                    now.push((**a).clone());
                    self.expand(now, node.clone(), out)?;
                    node.good &= !self.eventuality(&f);
                    node.next.insert(f.clone());
                }
                C::WeakUntil(ref a, ref b) => {
                    let mut now = todo.clone();
                    now.push((**b).clone());
                    self.expand(now, node.clone(), out)?;
                    todo.push((**a).clone());
                    node.next.insert(f.clone());
                }
                C::Always(ref a) => {
                    todo.push((**a).clone());
                    node.next.insert(f.clone());
                }
            }
            if node.pos & node.neg != 0 {
                return Ok(());
            }
        }
        out.push(node);
        Ok(())
    }
}

fn collect_eventualities(f: &C, out: &mut BTreeSet<C>) {
    if matches!(f, C::Until(_, _) | C::Eventually(_)) {
        out.insert(f.clone());
    }
    for c in f.children() {
        collect_eventualities(c, out);
    }
}

/// A Büchi automaton over the propositions of `f`.
pub fn ltl_to_buchi(f: &C) -> Result<Buchi> {
    let aps: Vec<String> = f.atoms().into_iter().collect();
    ltl_to_buchi_over(f, &aps)
}

/// A Büchi automaton over `aps`, which must contain the propositions of `f`.
pub fn ltl_to_buchi_over(f: &C, aps: &[String]) -> Result<Buchi> {
    let f = nnf(f);
    let mut out = Buchi::new(aps.iter().cloned())?;
    let aps = out.aps().to_vec();
    let mut evs = BTreeSet::new();
    collect_eventualities(&f, &mut evs);
    if evs.len() > 64 {
        return Err(Error::Unsupported("more than 64 eventualities".into()));
    }
    let k = evs.len();
    let mut tab = Tableau { aps: &aps, eventualities: evs.into_iter().collect(), covers: HashMap::new() };
    let letters = out.ts.num_letters() as Sym;
    let fits = |n: &Node, a: Sym| a & n.pos == n.pos && a & n.neg == 0;
    let in_set = |n: &Node, j: usize| k == 0 || n.good >> j & 1 == 1;
    let init = out.add_state("init", false);
    out.init.push(init);

    let mut ex: Explorer<(Node, usize)> = Explorer::new();
    // Node `i` of the explorer is state `i + 1`; state 0 is `init`.
    let add = |out: &mut Buchi, ex: &mut Explorer<(Node, usize)>, key: (Node, usize)| {
        let accepting = key.1 == 0 && in_set(&key.0, 0);
        let (i, new) = ex.id(key);
        if new {
            out.add_state(format!("n{i}"), accepting);
        }
        i + 1
    };
    let root: BTreeSet<C> = [f].into_iter().collect();
    for n in tab.covers(&root)? {
        let dst = add(&mut out, &mut ex, (n.clone(), 0));
        for a in (0..letters).filter(|&a| fits(&n, a)) {
            out.ts.add_edge(init, a, dst);
        }
    }
    let mut i = 0;
    while i < ex.len() {
        let (n, j) = ex.keys[i].clone();
        let src = i + 1;
        let j2 = if k > 0 && in_set(&n, j) { (j + 1) % k } else { j };
        for m in tab.covers(&n.next)? {
            let dst = add(&mut out, &mut ex, (m.clone(), j2));
            for a in (0..letters).filter(|&a| fits(&m, a)) {
                out.ts.add_edge(src, a, dst);
            }
        }
        i += 1;
    }
    Ok(out)
}
