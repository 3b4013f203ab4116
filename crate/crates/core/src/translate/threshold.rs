//! Threshold automata: for a weighted automaton `A` and a value `v`, a
//! Büchi automaton for `{w : ‖A‖(w) ≥ v}`.

use std::collections::BTreeSet;

use crate::automata::{muller_to_buchi, normalize_wba, rabin_to_buchi, Buchi, Muller, Rabin, RabinPair, Sym, Ts, Wba};
use crate::error::{Error, Result};
use crate::monoid::{ExtRat, Monoid};
use crate::semantics::Lasso;

/// `K3 → K2`: a `sup` over the non-`inf` weights equals a `limsup` once a
/// run may commit to a level `c`, after which it repeats `c` while the
/// original run only sees weights `≤ c` or `inf`.
pub fn k3_to_k2(a: &Wba) -> Result<Wba> {
    if a.monoid != Monoid::K3 {
        return Err(Error::MonoidMismatch(format!("expected k3, got {}", a.monoid)));
    }
    let levels: Vec<ExtRat> = a.image().into_iter().filter(ExtRat::is_finite).collect();
    let n = a.num_states();
    let mut out = Wba::new(Monoid::K2, a.aps().to_vec())?;
    for p in 0..n {
        out.add_state(a.ts.names[p].clone(), a.fin[p]);
    }
    for (ci, c) in levels.iter().enumerate() {
        for p in 0..n {
            out.add_state(format!("{}@{c}", a.ts.names[p]), a.fin[p]);
            debug_assert_eq!(out.num_states(), n + ci * n + p + 1);
        }
    }
    let lvl = |ci: usize, p: usize| n + ci * n + p;
    out.init = a.init.clone();
    for (&(p, s, q), w) in &a.wt {
        out.set_weight(p, s, q, w.clone());
        if let Some(ci) = levels.iter().position(|c| c == w) {
            out.set_weight(p, s, lvl(ci, q), w.clone());
        }
        for (ci, c) in levels.iter().enumerate() {
            if w <= c || w.is_pos_inf() {
                out.set_weight(lvl(ci, p), s, lvl(ci, q), c.clone());
            }
        }
    }
    Ok(out)
}

/// The letter-preserving structure shared by both threshold constructions:
/// states `(q, phase, flag)` with `flag` recording whether `q` is final.
/// Phases 0, 1, 3, 4 live on original states, phases 2, 5, 6 on copies.
struct Phases {
    n: usize,
}

const PHASES: [u8; 7] = [0, 1, 3, 4, 2, 5, 6];

impl Phases {
    fn id(&self, q: usize, phase: u8, fin: bool) -> usize {
        let ph = PHASES.iter().position(|&p| p == phase).unwrap();
        (q * PHASES.len() + ph) * 2 + fin as usize
    }

    fn len(&self) -> usize {
        self.n * PHASES.len() * 2
    }

    fn decode(&self, id: usize) -> (usize, u8, bool) {
        (id / 14, PHASES[id / 2 % 7], id % 2 == 1)
    }

    fn states(&self, a: &Wba) -> Ts {
        let mut ts = Ts { aps: a.ts.aps.clone(), names: Vec::new(), delta: Vec::new() };
        for id in 0..self.len() {
            let (q, ph, f) = self.decode(id);
            let copy = if [2, 5, 6].contains(&ph) { "s_" } else { "" };
            ts.add_state(format!("({copy}{},{ph},{})", a.ts.names[q], if f { "B" } else { "C" }));
        }
        ts
    }

    fn mask(&self, pred: impl Fn(usize, u8, bool) -> bool) -> Vec<bool> {
        (0..self.len()).map(|id| {
            let (q, ph, f) = self.decode(id);
            pred(q, ph, f)
        }).collect()
    }
}

enum Rules {
    Limsup,
    Liminf,
}

/// Transitions of the phase structure. From `(q, i, _)` over `a` to `q̃`
/// with weight `w ≠ -inf`, the target phases are listed per rule group.
fn phase_structure(a: &Wba, v: &ExtRat, rules: Rules) -> (Phases, Ts, usize) {
    let q0 = a.init[0];
    let ph = Phases { n: a.num_states() };
    let mut ts = ph.states(a);
    for src in 0..ph.len() {
        let (q, i, _) = ph.decode(src);
        if i == 0 && q != q0 {
            continue;
        }
        for s in 0..a.ts.num_letters() as Sym {
            for (qt, w) in a.succ(q, s) {
                let l = a.fin[qt];
                let inf = w.is_pos_inf();
                let ge = w >= v;
                let level = if inf { 4 } else if ge { 3 } else { 1 };
                let mut targets: Vec<u8> = Vec::new();
                match (i, &rules) {
                    (0, _) => {
                        targets.push(level);
                        if inf {
                            targets.push(2);
                        }
                        if matches!(rules, Rules::Liminf) && ge {
                            targets.push(5);
                        }
                    }
                    (1 | 3 | 4, _) => {
                        targets.push(level);
                        if i == 3 && matches!(rules, Rules::Limsup) {
                            targets.push(5);
                        }
                    }
                    (2, _) if inf => targets.push(2),
                    (5, Rules::Limsup) => {
                        targets.push(5);
                        if inf {
                            targets.push(6);
                        }
                    }
                    (5, Rules::Liminf) if ge => targets.push(5),
                    (6, Rules::Limsup) if inf => targets.push(6),
                    _ => {}
                }
                for j in targets {
                    ts.add_edge(src, s, ph.id(qt, j, l));
                }
            }
        }
    }
    let init = ph.id(q0, 0, false);
    (ph, ts, init)
}

fn special_threshold(a: &Wba, v: &ExtRat) -> Result<Option<Buchi>> {
    if v.is_neg_inf() {
        return Ok(Some(Buchi::universal(a.aps().to_vec())?));
    }
    if v.is_pos_inf() {
        let mut b = a.support();
        for p in 0..b.num_states() {
            for row in b.ts.delta[p].iter_mut() {
                row.clear();
            }
        }
        for (&(p, s, q), w) in &a.wt {
            if w.is_pos_inf() {
                b.ts.add_edge(p, s, q);
            }
        }
        return Ok(Some(b));
    }
    Ok(None)
}

fn check(a: &Wba, m: Monoid) -> Result<()> {
    if a.monoid != m {
        return Err(Error::MonoidMismatch(format!("expected {m}, got {}", a.monoid)));
    }
    if !a.is_normalized() {
        return Err(Error::NotNormalized);
    }
    Ok(())
}

/// Threshold automaton for a normalized automaton over `limsup`.
pub fn threshold_buchi_k2(a: &Wba, v: &ExtRat) -> Result<Buchi> {
    check(a, Monoid::K2)?;
    if let Some(b) = special_threshold(a, v)? {
        return Ok(b);
    }
    let (ph, ts, init) = phase_structure(a, v, Rules::Limsup);
    let f1 = ph.mask(|_, i, _| matches!(i, 3 | 2 | 6));
    let f2 = ph.mask(|_, _, f| f);
    let f3 = ph.mask(|_, i, _| matches!(i, 1 | 4));
    let s = (0..ph.len()).map(|x| f1[x] || f2[x] || f3[x]).collect();
    Ok(muller_to_buchi(&Muller { ts, init, f1, f2, s }).trim())
}

/// Threshold automaton for a normalized automaton over `liminf`.
pub fn threshold_buchi_k1(a: &Wba, v: &ExtRat) -> Result<Buchi> {
    check(a, Monoid::K1)?;
    if let Some(b) = special_threshold(a, v)? {
        return Ok(b);
    }
    let (ph, ts, init) = phase_structure(a, v, Rules::Liminf);
    let none = vec![false; ph.len()];
    let pairs = vec![
        RabinPair {
            avoid: ph.mask(|_, i, _| i == 1),
            visit: vec![ph.mask(|_, i, _| i == 3), ph.mask(|_, i, f| f && matches!(i, 0 | 1 | 3 | 4))],
        },
        RabinPair { avoid: none.clone(), visit: vec![ph.mask(|_, i, f| f && i == 2)] },
        RabinPair { avoid: none, visit: vec![ph.mask(|_, i, f| f && i == 5)] },
    ];
    Ok(rabin_to_buchi(&Rabin { ts, init, pairs }).trim())
}

/// Threshold automaton for any automaton over `K1`, `K2` or `K3`;
/// normalizes and converts `K3` to `K2` first when needed.
pub fn threshold_buchi(a: &Wba, v: &ExtRat) -> Result<Buchi> {
    let a = prepare(a)?;
    if a.init.is_empty() {
        return if v.is_neg_inf() { Buchi::universal(a.aps().to_vec()) } else { Buchi::empty(a.aps().to_vec()) };
    }
    match a.monoid {
        Monoid::K1 => threshold_buchi_k1(&a, v),
        _ => threshold_buchi_k2(&a, v),
    }
}

/// The input in the shape the threshold constructions expect: over `K1` or
/// `K2`, with at most one initial state.
fn prepare(a: &Wba) -> Result<Wba> {
    let a = if a.monoid == Monoid::K3 { k3_to_k2(a)? } else { a.clone() };
    Ok(if a.init.len() > 1 { normalize_wba(&a) } else { a })
}

/// All threshold automata of one weighted automaton, one per value that a
/// behavior can take besides `-inf`.
pub struct ThresholdFamily {
    pub levels: Vec<(ExtRat, Buchi)>,
}

impl ThresholdFamily {
    pub fn new(a: &Wba) -> Result<Self> {
        let values: BTreeSet<ExtRat> = a.image().into_iter().chain([ExtRat::PosInf]).collect();
        let prepared = prepare(a)?;
        let mut levels = Vec::new();
        for v in values.into_iter().rev() {
            let b = if prepared.init.is_empty() {
                Buchi::empty(a.aps().to_vec())?
            } else if prepared.monoid == Monoid::K1 {
                threshold_buchi_k1(&prepared, &v)?
            } else {
                threshold_buchi_k2(&prepared, &v)?
            };
            levels.push((v, b));
        }
        Ok(ThresholdFamily { levels })
    }

    /// The largest level whose threshold automaton accepts `w`.
    pub fn behavior(&self, w: &Lasso) -> ExtRat {
        self.levels.iter().find(|(_, b)| b.accepts(w)).map(|(v, _)| v.clone()).unwrap_or(ExtRat::NegInf)
    }
}
