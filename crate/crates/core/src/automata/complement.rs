//! Rank-based complementation restricted to tight level rankings.

use super::buchi::Buchi;
use super::graph::Explorer;
use super::ts::Sym;
use crate::error::{Error, Result};

const NONE: u8 = u8::MAX;

/// Limits that keep complementation at desk scale.
#[derive(Clone, Copy, Debug)]
pub struct ComplementLimits {
    /// Largest accepted input automaton.
    pub input_states: usize,
    /// Largest complement that will be materialized.
    pub output_states: usize,
}

impl Default for ComplementLimits {
    fn default() -> Self {
        ComplementLimits { input_states: 10, output_states: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Macro {
    /// Subset phase, before the ranking is guessed.
    Subset(Vec<bool>),
    /// Ranks per state (`NONE` when absent) and the breakpoint set.
    Ranked(Vec<u8>, Vec<bool>),
}

/// Odd ranks form an initial segment `1, 3, …, r` with `r` the maximum.
fn tight(f: &[u8]) -> bool {
    let ranks: Vec<u8> = f.iter().copied().filter(|&r| r != NONE).collect();
    let Some(&max) = ranks.iter().max() else { return true };
    max % 2 == 1 && (1..=max).step_by(2).all(|o| ranks.contains(&o))
}

/// Every tight ranking below `bound` that gives final states even ranks.
fn rankings(bound: &[u8], fin: &[bool]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = bound.to_vec();
    fn go(i: usize, bound: &[u8], fin: &[bool], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == bound.len() {
            if tight(cur) {
                out.push(cur.clone());
            }
            return;
        }
        if bound[i] == NONE {
            cur[i] = NONE;
            go(i + 1, bound, fin, cur, out);
            return;
        }
        for r in 0..=bound[i] {
            if fin[i] && r % 2 == 1 {
                continue;
            }
            cur[i] = r;
            go(i + 1, bound, fin, cur, out);
        }
    }
    go(0, bound, fin, &mut cur, &mut out);
    out
}

/// An automaton for the complement language.
pub fn buchi_complement(a: &Buchi, limits: ComplementLimits) -> Result<Buchi> {
    let n = a.num_states();
    if n > limits.input_states {
        return Err(Error::CapExceeded { what: "complementation input".into(), needed: n, cap: limits.input_states });
    }
    let max_rank = (2 * n).saturating_sub(1).min(250) as u8;
    let mut out = Buchi::new(a.aps().to_vec())?;
    let mut ex: Explorer<Macro> = Explorer::new();
    let mut init_set = vec![false; n];
    a.init.iter().for_each(|&q| init_set[q] = true);
    ex.id(Macro::Subset(init_set));
    out.add_state("S0", false);
    out.init.push(0);
    let mut i = 0;
    while i < ex.len() {
        let cur = ex.keys[i].clone();
        for s in 0..a.ts.num_letters() as Sym {
            let mut succs = Vec::new();
            match &cur {
                Macro::Subset(set) => {
                    let mut next = vec![false; n];
                    let mut bound = vec![NONE; n];
                    for p in (0..n).filter(|&p| set[p]) {
                        for &q in a.ts.succ(p, s) {
                            next[q] = true;
                            bound[q] = max_rank;
                        }
                    }
                    for f in rankings(&bound, &a.fin) {
                        succs.push(Macro::Ranked(f, vec![false; n]));
                    }
                    succs.push(Macro::Subset(next));
                }
                Macro::Ranked(f, o) => {
                    let mut bound = vec![NONE; n];
                    let mut o_post = vec![false; n];
                    for p in (0..n).filter(|&p| f[p] != NONE) {
                        for &q in a.ts.succ(p, s) {
                            bound[q] = if bound[q] == NONE { f[p] } else { bound[q].min(f[p]) };
                            if o[p] {
                                o_post[q] = true;
                            }
                        }
                    }
                    let refill = !o.iter().any(|&x| x);
                    for g in rankings(&bound, &a.fin) {
                        let o2: Vec<bool> = (0..n)
                            .map(|q| g[q] != NONE && g[q] % 2 == 0 && (refill || o_post[q]))
                            .collect();
                        succs.push(Macro::Ranked(g, o2));
                    }
                }
            }
            for m in succs {
                let accepting = matches!(&m, Macro::Ranked(_, o) if !o.iter().any(|&x| x));
                let (id, new) = ex.id(m);
                if new {
                    if ex.len() > limits.output_states {
                        return Err(Error::CapExceeded {
                            what: "complement construction".into(),
                            needed: ex.len(),
                            cap: limits.output_states,
                        });
                    }
                    out.add_state(format!("C{id}"), accepting);
                }
                out.ts.add_edge(i, s, id);
            }
        }
        i += 1;
    }
    Ok(out)
}
