use std::collections::BTreeSet;
use std::fmt;

use crate::monoid::ExtRat;

/// A weighted LTL formula. Negation only occurs on atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(ExtRat),
    Atom(String),
    NegAtom(String),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    /// `φ W ψ`, definitionally `G φ | (φ U ψ)`.
    WeakUntil(Box<Formula>, Box<Formula>),
    Always(Box<Formula>),
}

impl Formula {
    pub fn tt() -> Self {
        Formula::Const(ExtRat::PosInf)
    }

    pub fn zero() -> Self {
        Formula::Const(ExtRat::NegInf)
    }

    pub fn konst(v: impl Into<ExtRat>) -> Self {
        Formula::Const(v.into())
    }

    pub fn atom(a: &str) -> Self {
        Formula::Atom(a.to_string())
    }

    pub fn neg_atom(a: &str) -> Self {
        Formula::NegAtom(a.to_string())
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn next(a: Formula) -> Self {
        Formula::Next(Box::new(a))
    }

    pub fn until(a: Formula, b: Formula) -> Self {
        Formula::Until(Box::new(a), Box::new(b))
    }

    pub fn weak_until(a: Formula, b: Formula) -> Self {
        Formula::WeakUntil(Box::new(a), Box::new(b))
    }

    pub fn always(a: Formula) -> Self {
        Formula::Always(Box::new(a))
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Const(_) | Formula::Atom(_) | Formula::NegAtom(_) => vec![],
            Formula::Next(a) | Formula::Always(a) => vec![a],
            Formula::Or(a, b) | Formula::And(a, b) | Formula::Until(a, b) | Formula::WeakUntil(a, b) => vec![a, b],
        }
    }

    /// Atomic propositions mentioned anywhere in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) | Formula::NegAtom(a) => {
                out.insert(a.clone());
            }
            _ => self.children().into_iter().for_each(|c| c.collect_atoms(out)),
        }
    }

    /// Every constant occurring in the formula.
    pub fn constants(&self) -> BTreeSet<ExtRat> {
        let mut out = BTreeSet::new();
        self.collect_constants(&mut out);
        out
    }

    fn collect_constants(&self, out: &mut BTreeSet<ExtRat>) {
        match self {
            Formula::Const(k) => {
                out.insert(k.clone());
            }
            _ => self.children().into_iter().for_each(|c| c.collect_constants(out)),
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Formula::depth).max().unwrap_or(0)
    }
}

/// Replaces every `φ W ψ` by `G φ | (φ U ψ)`.
pub fn desugar_weak_until(f: &Formula) -> Formula {
    let d = |x: &Formula| Box::new(desugar_weak_until(x));
    match f {
        Formula::Const(_) | Formula::Atom(_) | Formula::NegAtom(_) => f.clone(),
        Formula::Or(a, b) => Formula::Or(d(a), d(b)),
        Formula::And(a, b) => Formula::And(d(a), d(b)),
        Formula::Next(a) => Formula::Next(d(a)),
        Formula::Always(a) => Formula::Always(d(a)),
        Formula::Until(a, b) => Formula::Until(d(a), d(b)),
        Formula::WeakUntil(a, b) => {
            let (a, b) = (desugar_weak_until(a), desugar_weak_until(b));
            Formula::or(Formula::always(a.clone()), Formula::until(a, b))
        }
    }
}

fn write_const(f: &mut fmt::Formatter<'_>, k: &ExtRat) -> fmt::Result {
    match k {
        ExtRat::PosInf => f.write_str("true"),
        ExtRat::NegInf => f.write_str("0"),
        ExtRat::Finite(r) if r == &num_rational::BigRational::from_integer(0.into()) => f.write_str("0/1"),
        _ => write!(f, "{k}"),
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(k) => write_const(f, k),
            Formula::Atom(a) => f.write_str(a),
            Formula::NegAtom(a) => write!(f, "!{a}"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Next(a) => write!(f, "X {a}"),
            Formula::Until(a, b) => write!(f, "({a} U {b})"),
            Formula::WeakUntil(a, b) => write!(f, "({a} W {b})"),
            Formula::Always(a) => write!(f, "G {a}"),
        }
    }
}

/// Classical LTL with unrestricted negation and the derived operators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassicalFormula {
    True,
    False,
    Atom(String),
    Not(Box<ClassicalFormula>),
    And(Box<ClassicalFormula>, Box<ClassicalFormula>),
    Or(Box<ClassicalFormula>, Box<ClassicalFormula>),
    Next(Box<ClassicalFormula>),
    Until(Box<ClassicalFormula>, Box<ClassicalFormula>),
    WeakUntil(Box<ClassicalFormula>, Box<ClassicalFormula>),
    Always(Box<ClassicalFormula>),
    Eventually(Box<ClassicalFormula>),
}

use ClassicalFormula as C;

impl ClassicalFormula {
    pub fn atom(a: &str) -> Self {
        C::Atom(a.to_string())
    }

    /// Negation that folds constants and double negation.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: C) -> C {
        match a {
            C::True => C::False,
            C::False => C::True,
            C::Not(x) => *x,
            x => C::Not(Box::new(x)),
        }
    }

    pub fn and(a: C, b: C) -> C {
        match (a, b) {
            (C::False, _) | (_, C::False) => C::False,
            (C::True, x) | (x, C::True) => x,
            (x, y) if x == y => x,
            (x, y) => C::And(Box::new(x), Box::new(y)),
        }
    }

    pub fn or(a: C, b: C) -> C {
        match (a, b) {
            (C::True, _) | (_, C::True) => C::True,
            (C::False, x) | (x, C::False) => x,
            (x, y) if x == y => x,
            (x, y) => C::Or(Box::new(x), Box::new(y)),
        }
    }

    pub fn and_all(xs: impl IntoIterator<Item = C>) -> C {
        xs.into_iter().fold(C::True, C::and)
    }

    pub fn or_all(xs: impl IntoIterator<Item = C>) -> C {
        xs.into_iter().fold(C::False, C::or)
    }

    pub fn next(a: C) -> C {
        match a {
            C::True | C::False => a,
            x => C::Next(Box::new(x)),
        }
    }

    pub fn until(a: C, b: C) -> C {
        match (a, b) {
            (_, C::True) => C::True,
            (_, C::False) => C::False,
            (C::False, y) => y,
            (C::True, y) => C::eventually(y),
            (x, y) => C::Until(Box::new(x), Box::new(y)),
        }
    }

    pub fn weak_until(a: C, b: C) -> C {
        match (a, b) {
            (_, C::True) | (C::True, _) => C::True,
            (C::False, y) => y,
            (x, C::False) => C::always(x),
            (x, y) => C::WeakUntil(Box::new(x), Box::new(y)),
        }
    }

    pub fn always(a: C) -> C {
        match a {
            C::True | C::False => a,
            x => C::Always(Box::new(x)),
        }
    }

    pub fn eventually(a: C) -> C {
        match a {
            C::True | C::False => a,
            x => C::Eventually(Box::new(x)),
        }
    }

    pub fn children(&self) -> Vec<&C> {
        match self {
            C::True | C::False | C::Atom(_) => vec![],
            C::Not(a) | C::Next(a) | C::Always(a) | C::Eventually(a) => vec![a],
            C::And(a, b) | C::Or(a, b) | C::Until(a, b) | C::WeakUntil(a, b) => vec![a, b],
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        fn go(f: &C, out: &mut BTreeSet<String>) {
            if let C::Atom(a) = f {
                out.insert(a.clone());
            }
            f.children().into_iter().for_each(|c| go(c, out));
        }
        go(self, &mut out);
        out
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(C::size).sum::<usize>()
    }
}

/// Negation pushed to the atoms.
pub fn negate_classical(f: &C) -> C {
    match f {
        C::True => C::False,
        C::False => C::True,
        C::Atom(_) => C::Not(Box::new(f.clone())),
        C::Not(a) => nnf(a),
        C::And(a, b) => C::or(negate_classical(a), negate_classical(b)),
        C::Or(a, b) => C::and(negate_classical(a), negate_classical(b)),
        C::Next(a) => C::next(negate_classical(a)),
        C::Until(a, b) => {
            let (na, nb) = (negate_classical(a), negate_classical(b));
            C::weak_until(nb.clone(), C::and(na, nb))
        }
        C::WeakUntil(a, b) => {
            let (na, nb) = (negate_classical(a), negate_classical(b));
            C::until(nb.clone(), C::and(na, nb))
        }
        C::Always(a) => C::eventually(negate_classical(a)),
        C::Eventually(a) => C::always(negate_classical(a)),
    }
}

/// Negation normal form: `Not` only directly above atoms.
pub fn nnf(f: &C) -> C {
    match f {
        C::True | C::False | C::Atom(_) => f.clone(),
        C::Not(a) => negate_classical(a),
        C::And(a, b) => C::and(nnf(a), nnf(b)),
        C::Or(a, b) => C::or(nnf(a), nnf(b)),
        C::Next(a) => C::next(nnf(a)),
        C::Until(a, b) => C::until(nnf(a), nnf(b)),
        C::WeakUntil(a, b) => C::weak_until(nnf(a), nnf(b)),
        C::Always(a) => C::always(nnf(a)),
        C::Eventually(a) => C::eventually(nnf(a)),
    }
}

impl fmt::Display for ClassicalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            C::True => f.write_str("true"),
            C::False => f.write_str("false"),
            C::Atom(a) => f.write_str(a),
            C::Not(a) => write!(f, "!{a}"),
            C::And(a, b) => write!(f, "({a} & {b})"),
            C::Or(a, b) => write!(f, "({a} | {b})"),
            C::Next(a) => write!(f, "X {a}"),
            C::Until(a, b) => write!(f, "({a} U {b})"),
            C::WeakUntil(a, b) => write!(f, "({a} W {b})"),
            C::Always(a) => write!(f, "G {a}"),
            C::Eventually(a) => write!(f, "F {a}"),
        }
    }
}
