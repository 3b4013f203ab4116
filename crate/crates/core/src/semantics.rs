//! Exact evaluation of weighted and classical LTL on ultimately periodic words.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::logic::{ClassicalFormula, Formula};
use crate::monoid::{ExtRat, Monoid, OmegaMonoid, WeightSeq};

/// A letter is the set of atomic propositions that hold.
pub type Letter = BTreeSet<String>;

/// The word `prefix · cycle^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    pub prefix: Vec<Letter>,
    pub cycle: Vec<Letter>,
}

pub fn letter(aps: &[&str]) -> Letter {
    aps.iter().map(|s| s.to_string()).collect()
}

impl Lasso {
    /// Panics if `cycle` is empty.
    pub fn new(prefix: Vec<Letter>, cycle: Vec<Letter>) -> Self {
        assert!(!cycle.is_empty(), "a lasso needs a non-empty cycle");
        Lasso { prefix, cycle }
    }

    /// Number of distinct suffix classes: prefix positions plus cycle residues.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// Successor of a position in `0..positions()`.
    pub fn next(&self, i: usize) -> usize {
        if i + 1 < self.positions() {
            i + 1
        } else {
            self.prefix.len()
        }
    }

    pub fn at(&self, i: usize) -> &Letter {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    pub fn suffix(&self, i: usize) -> Lasso {
        if i <= self.prefix.len() {
            Lasso { prefix: self.prefix[i..].to_vec(), cycle: self.cycle.clone() }
        } else {
            let r = (i - self.prefix.len()) % self.cycle.len();
            let mut cycle = self.cycle[r..].to_vec();
            cycle.extend_from_slice(&self.cycle[..r]);
            Lasso { prefix: Vec::new(), cycle }
        }
    }

    /// The same word with `n` copies of the cycle moved into the prefix.
    pub fn unroll(&self, n: usize) -> Lasso {
        let mut prefix = self.prefix.clone();
        for _ in 0..n {
            prefix.extend(self.cycle.iter().cloned());
        }
        Lasso { prefix, cycle: self.cycle.clone() }
    }

    /// The same word with the cycle written `n` times (`n >= 1`).
    pub fn repeat_cycle(&self, n: usize) -> Lasso {
        let cycle = (0..n.max(1)).flat_map(|_| self.cycle.iter().cloned()).collect();
        Lasso { prefix: self.prefix.clone(), cycle }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        self.prefix.iter().chain(&self.cycle).flatten().cloned().collect()
    }
}

fn write_letter(f: &mut fmt::Formatter<'_>, l: &Letter) -> fmt::Result {
    write!(f, "{{{}}}", l.iter().cloned().collect::<Vec<_>>().join(","))
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.prefix {
            write_letter(f, l)?;
            f.write_str(" ")?;
        }
        f.write_str("|")?;
        for l in &self.cycle {
            f.write_str(" ")?;
            write_letter(f, l)?;
        }
        Ok(())
    }
}

/// Reads a sequence of letters such as `{a} {a,b} {}`.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut rest = text.trim_start();
    let offset = |r: &str| text.len() - r.len();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| Error::parse(offset(rest), "expected `{`"))?;
        let close = body.find('}').ok_or_else(|| Error::parse(offset(rest), "unclosed `{`"))?;
        let mut l = Letter::new();
        for ap in body[..close].split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if !ap.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::parse(offset(rest), format!("bad proposition name `{ap}`")));
            }
            l.insert(ap.to_string());
        }
        out.push(l);
        rest = body[close + 1..].trim_start();
    }
    Ok(out)
}

impl FromStr for Lasso {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, c) = s.split_once('|').ok_or_else(|| Error::parse(0, "a lasso needs `|` before its cycle"))?;
        let prefix = parse_letters(p)?;
        let cycle = parse_letters(c).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + p.len() + 1, msg },
            e => e,
        })?;
        if cycle.is_empty() {
            return Err(Error::parse(s.len(), "the cycle must be non-empty"));
        }
        Ok(Lasso { prefix, cycle })
    }
}

/// The weight sequence read from position `i` of a per-position table.
fn seq_from(w: &Lasso, vals: &[ExtRat], i: usize) -> WeightSeq<ExtRat> {
    let p = w.prefix.len();
    WeightSeq::new(vals[..p].to_vec(), vals[p..].to_vec()).suffix(i)
}

/// Weighted evaluator; `until_periods` sets how many cycle periods beyond
/// the prefix the until supremum inspects.
struct Eval<'a> {
    w: &'a Lasso,
    m: Monoid,
    until_periods: usize,
}

impl Eval<'_> {
    fn go(&self, f: &Formula) -> Vec<ExtRat> {
        let n = self.w.positions();
        let pos = 0..n;
        match f {
            Formula::Const(k) => vec![k.clone(); n],
            Formula::Atom(a) | Formula::NegAtom(a) => {
                let positive = matches!(f, Formula::Atom(_));
                pos.map(|i| {
                    if self.w.at(i).contains(a) == positive {
                        ExtRat::PosInf
                    } else {
                        ExtRat::NegInf
                    }
                })
                .collect()
            }
            Formula::Or(a, b) | Formula::And(a, b) => {
                let (x, y) = (self.go(a), self.go(b));
                let or = matches!(f, Formula::Or(..));
                pos.map(|i| if or { self.m.plus(&x[i], &y[i]) } else { self.m.times(&x[i], &y[i]) })
                    .collect()
            }
            Formula::Next(a) => {
                let x = self.go(a);
                pos.map(|i| x[self.w.next(i)].clone()).collect()
            }
            Formula::Always(a) => {
                let x = self.go(a);
                pos.map(|i| self.m.val_omega(&seq_from(self.w, &x, i))).collect()
            }
            Formula::Until(a, b) => {
                let (x, y) = (self.go(a), self.go(b));
                pos.map(|i| self.until_at(&x, &y, i)).collect()
            }
            Formula::WeakUntil(a, b) => {
                let (x, y) = (self.go(a), self.go(b));
                pos.map(|i| {
                    let g = self.m.val_omega(&seq_from(self.w, &x, i));
                    self.m.plus(&g, &self.until_at(&x, &y, i))
                })
                .collect()
            }
        }
    }

    /// `sup_h Val(x_i, …, x_{i+h-1}, y_{i+h}, 1, 1, …)`.
    ///
    /// Each term depends only on which values occur in the window, and the
    /// set of values of `x` seen from `i` stops growing once a full period of
    /// the cycle has been crossed, after which `y` repeats with the cycle.
    fn until_at(&self, x: &[ExtRat], y: &[ExtRat], i: usize) -> ExtRat {
        let xs = seq_from(self.w, x, 0);
        let ys = seq_from(self.w, y, 0);
        let horizon = self.w.prefix.len() + self.until_periods * self.w.cycle.len();
        let mut best = self.m.zero();
        let mut window: Vec<ExtRat> = Vec::new();
        for h in 0..horizon {
            let mut pre = window.clone();
            pre.push(ys.at(i + h).clone());
            let term = self.m.val_omega(&WeightSeq::new(pre, vec![self.m.one()]));
            best = self.m.plus(&best, &term);
            window.push(xs.at(i + h).clone());
        }
        best
    }
}

/// The value of `f` on `w`.
pub fn eval(f: &Formula, w: &Lasso, m: Monoid) -> ExtRat {
    eval_with_until_periods(f, w, m, 2)
}

/// [`eval`] with a custom until horizon of `|prefix| + periods·|cycle|`.
pub fn eval_with_until_periods(f: &Formula, w: &Lasso, m: Monoid, periods: usize) -> ExtRat {
    Eval { w, m, until_periods: periods }.go(f).swap_remove(0)
}

fn classical_table(f: &ClassicalFormula, w: &Lasso) -> Vec<bool> {
    use ClassicalFormula as C;
    let n = w.positions();
    let fix = |init: bool, step: &dyn Fn(usize, &[bool]) -> bool| {
        let mut s = vec![init; n];
        loop {
            let t: Vec<bool> = (0..n).map(|i| step(i, &s)).collect();
            if t == s {
                return s;
            }
            s = t;
        }
    };
    match f {
        C::True => vec![true; n],
        C::False => vec![false; n],
        C::Atom(a) => (0..n).map(|i| w.at(i).contains(a)).collect(),
        C::Not(a) => classical_table(a, w).into_iter().map(|b| !b).collect(),
        C::And(a, b) | C::Or(a, b) => {
            let (x, y) = (classical_table(a, w), classical_table(b, w));
            let and = matches!(f, C::And(..));
            (0..n).map(|i| if and { x[i] && y[i] } else { x[i] || y[i] }).collect()
        }
        C::Next(a) => {
            let x = classical_table(a, w);
            (0..n).map(|i| x[w.next(i)]).collect()
        }
        C::Until(a, b) | C::WeakUntil(a, b) => {
            let (x, y) = (classical_table(a, w), classical_table(b, w));
            fix(matches!(f, C::WeakUntil(..)), &|i, s| y[i] || (x[i] && s[w.next(i)]))
        }
        C::Always(a) => {
            let x = classical_table(a, w);
            fix(true, &|i, s| x[i] && s[w.next(i)])
        }
        C::Eventually(a) => {
            let x = classical_table(a, w);
            fix(false, &|i, s| x[i] || s[w.next(i)])
        }
    }
}

/// Classical satisfaction `w ⊨ f`.
pub fn eval_classical(f: &ClassicalFormula, w: &Lasso) -> bool {
    classical_table(f, w)[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_classical, parse_formula};

    fn lasso(s: &str) -> Lasso {
        s.parse().unwrap()
    }

    fn ev(f: &str, w: &str, m: Monoid) -> ExtRat {
        eval(&parse_formula(f).unwrap(), &lasso(w), m)
    }

    #[test]
    fn lasso_syntax() {
        let w = lasso("{a} {b} | {a,b} {}");
        assert_eq!(w.prefix.len(), 2);
        assert_eq!(w.to_string(), "{a} {b} | {a,b} {}");
        assert_eq!(lasso("| {a}").to_string(), "| {a}");
        assert!("{a} {b}".parse::<Lasso>().is_err());
        assert!("{a} |".parse::<Lasso>().is_err());
        assert!("{a | {b}".parse::<Lasso>().is_err());
    }

    #[test]
    fn suffixes() {
        let w = lasso("{a} | {b} {c}");
        assert_eq!(w.suffix(0), w);
        assert_eq!(w.suffix(2), lasso("| {c} {b}"));
        assert_eq!(w.suffix(1).suffix(2), w.suffix(3));
    }

    #[test]
    fn worked_examples() {
        let g = "G((a & 2) | (b & 3))";
        assert_eq!(ev(g, "| {a}", Monoid::K3), ExtRat::int(2));
        assert_eq!(ev(g, "| {a} {b}", Monoid::K2), ExtRat::int(3));
        assert_eq!(ev(g, "{b} | {a}", Monoid::K2), ExtRat::int(2));
        let h = "G(a & 2) & (true U c)";
        assert_eq!(ev(h, "| {a,c}", Monoid::K1), ExtRat::int(2));
        assert_eq!(ev(h, "| {a}", Monoid::K1), ExtRat::NegInf);
        assert_eq!(ev("(3 & a) U (3 & b)", "| {a}", Monoid::K2), ExtRat::NegInf);
    }

    #[test]
    fn classical_examples() {
        let c = |f: &str, w: &str| eval_classical(&parse_classical(f).unwrap(), &lasso(w));
        assert!(c("a U b", "{a} | {b}"));
        assert!(!c("G a", "| {a} {b}"));
        assert!(c("b W a", "| {b}"));
        assert!(!c("b U a", "| {b}"));
        assert!(c("G F b & F G a", "| {a,b}"));
    }
}
