use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::ExtRat;

use super::formula::{desugar_weak_until, ClassicalFormula, Formula};

/// Syntactic fragment membership of a formula.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FragmentReport {
    pub bltl: bool,
    pub sbltl: bool,
    pub r_stltl: bool,
    pub t_rultl: bool,
    pub or_t_rultl: bool,
    /// The `k` used for the k-indexed flags, when one was given.
    pub k: Option<ExtRat>,
    pub k_stltl: bool,
    pub k_t_rultl: bool,
    pub k_or_t_rultl: bool,
}

impl fmt::Display for FragmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "bltl={}", flag(self.bltl))?;
        writeln!(f, "sbltl={}", flag(self.sbltl))?;
        writeln!(f, "r-stltl={}", flag(self.r_stltl))?;
        writeln!(f, "t-rultl={}", flag(self.t_rultl))?;
        write!(f, "or-t-rultl={}", flag(self.or_t_rultl))?;
        if let Some(k) = &self.k {
            writeln!(f)?;
            writeln!(f, "k={k}")?;
            writeln!(f, "k-stltl={}", flag(self.k_stltl))?;
            writeln!(f, "k-t-rultl={}", flag(self.k_t_rultl))?;
            write!(f, "k-or-t-rultl={}", flag(self.k_or_t_rultl))?;
        }
        Ok(())
    }
}

/// Options for [`classify_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    /// Accept `(λ U ξ) | G ξ` in the restricted disjunction rule instead
    /// of `(λ U ξ) | G λ`.
    pub strict_text_or_rule: bool,
}

/// One disjunct `k ∧ φ` of a step formula, with `φ` already classical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepAtom {
    pub weight: ExtRat,
    pub guard: ClassicalFormula,
}

fn is_special(k: &ExtRat) -> bool {
    !k.is_finite()
}

fn flatten<'a>(f: &'a Formula, or: bool, out: &mut Vec<&'a Formula>) {
    match (f, or) {
        (Formula::Or(a, b), true) | (Formula::And(a, b), false) => {
            flatten(a, or, out);
            flatten(b, or, out);
        }
        _ => out.push(f),
    }
}

pub(crate) fn disjuncts(f: &Formula) -> Vec<&Formula> {
    let mut v = Vec::new();
    flatten(f, true, &mut v);
    v
}

pub(crate) fn conjuncts(f: &Formula) -> Vec<&Formula> {
    let mut v = Vec::new();
    flatten(f, false, &mut v);
    v
}

/// Boolean LTL: constants `0`/`true`, literals, `|`, `&`, `X`, `U`, `G`,
/// with `W` read as its abbreviation.
pub fn is_bltl(f: &Formula) -> bool {
    match f {
        Formula::Const(k) => is_special(k),
        Formula::Atom(_) | Formula::NegAtom(_) => true,
        _ => f.children().into_iter().all(is_bltl),
    }
}

/// Safe boolean LTL: `true`, literals, `|`, `&`, `X`, `W`, `G`.
pub fn is_sbltl(f: &Formula) -> bool {
    match f {
        Formula::Const(k) => k.is_pos_inf(),
        Formula::Atom(_) | Formula::NegAtom(_) => true,
        Formula::Until(_, _) => false,
        _ => f.children().into_iter().all(is_sbltl),
    }
}

/// Classical reading of a boolean formula.
pub fn to_classical(f: &Formula) -> Option<ClassicalFormula> {
    use ClassicalFormula as C;
    let r = |x: &Formula| to_classical(x);
    Some(match f {
        Formula::Const(ExtRat::PosInf) => C::True,
        Formula::Const(ExtRat::NegInf) => C::False,
        Formula::Const(_) => return None,
        Formula::Atom(a) => C::atom(a),
        Formula::NegAtom(a) => C::Not(Box::new(C::atom(a))),
        Formula::Or(a, b) => C::or(r(a)?, r(b)?),
        Formula::And(a, b) => C::and(r(a)?, r(b)?),
        Formula::Next(a) => C::next(r(a)?),
        Formula::Until(a, b) => C::until(r(a)?, r(b)?),
        Formula::WeakUntil(a, b) => C::weak_until(r(a)?, r(b)?),
        Formula::Always(a) => C::always(r(a)?),
    })
}

/// Decomposes a step formula `⋁ (k_i ∧ φ_i)`. Disjunctions and
/// conjunctions are read as flat chains. Each disjunct must contain exactly
/// one constant outside `{0, 1}` and otherwise boolean conjuncts accepted
/// by `guard_ok`; a bare constant stands for `k ∧ true`.
fn step_with(f: &Formula, guard_ok: fn(&Formula) -> bool) -> Option<Vec<StepAtom>> {
    let mut atoms = Vec::new();
    for d in disjuncts(f) {
        let cs = conjuncts(d);
        let mut weight = None;
        let mut guards = Vec::new();
        for c in cs {
            match c {
                Formula::Const(k) if !is_special(k) => {
                    if weight.replace(k.clone()).is_some() {
                        return None;
                    }
                }
                g if guard_ok(g) => guards.push(to_classical(g)?),
                _ => return None,
            }
        }
        atoms.push(StepAtom { weight: weight?, guard: ClassicalFormula::and_all(guards) });
    }
    Some(atoms)
}

/// Step formula with bLTL guards.
pub fn r_step(f: &Formula) -> Option<Vec<StepAtom>> {
    step_with(f, is_bltl)
}

/// Step formula with sbLTL guards and every weight at least `k`.
pub fn k_step(f: &Formula, k: &ExtRat) -> Option<Vec<StepAtom>> {
    step_with(f, is_sbltl).filter(|atoms| atoms.iter().all(|a| &a.weight >= k))
}

fn t_special(f: &Formula) -> bool {
    match f {
        Formula::Until(a, b) => r_step(a).is_some() && r_step(b).is_some(),
        Formula::Always(a) => r_step(a).is_some(),
        _ => r_step(f).is_some(),
    }
}

fn k_special(f: &Formula, k: &ExtRat) -> bool {
    match f {
        Formula::WeakUntil(a, b) => k_step(a, k).is_some() && k_step(b, k).is_some(),
        Formula::Always(a) => k_step(a, k).is_some(),
        _ => k_step(f, k).is_some(),
    }
}

/// The conjunction rule: one weighted conjunct of the allowed shape, every
/// other conjunct boolean.
fn conj_rule(f: &Formula, boolean: fn(&Formula) -> bool, special: &dyn Fn(&Formula) -> bool) -> bool {
    let cs = conjuncts(f);
    let weighted: Vec<_> = cs.iter().filter(|c| !boolean(c)).collect();
    weighted.len() == 1 && special(weighted[0])
}

fn t_rultl(f: &Formula, restricted_or: bool, opts: ClassifyOptions) -> bool {
    if matches!(f, Formula::Const(_)) || is_bltl(f) || r_step(f).is_some() {
        return true;
    }
    match f {
        Formula::Next(a) => t_rultl(a, restricted_or, opts),
        Formula::Or(a, b) => {
            if restricted_or {
                or_pair(a, b, opts) || or_pair(b, a, opts)
            } else {
                t_rultl(a, restricted_or, opts) && t_rultl(b, restricted_or, opts)
            }
        }
        Formula::And(_, _) => conj_rule(f, is_bltl, &t_special),
        Formula::Until(_, _) | Formula::Always(_) => t_special(f),
        Formula::WeakUntil(_, _) => t_rultl(&desugar_weak_until(f), restricted_or, opts),
        _ => false,
    }
}

/// `(λ U ξ) | G λ`, or `(λ U ξ) | G ξ` under the strict-text option.
fn or_pair(u: &Formula, g: &Formula, opts: ClassifyOptions) -> bool {
    match (u, g) {
        (Formula::Until(l, x), Formula::Always(y)) => {
            let partner = if opts.strict_text_or_rule { x } else { l };
            partner == y && r_step(l).is_some() && r_step(x).is_some()
        }
        _ => false,
    }
}

fn k_rultl(f: &Formula, k: &ExtRat, restricted_or: bool) -> bool {
    match f {
        Formula::Const(c) => return c >= k,
        _ if is_sbltl(f) || k_step(f, k).is_some() => return true,
        _ => {}
    }
    match f {
        Formula::Next(a) => k_rultl(a, k, restricted_or),
        Formula::Or(a, b) => {
            if restricted_or {
                k_step(a, k).is_some() && k_step(b, k).is_some()
            } else {
                k_rultl(a, k, restricted_or) && k_rultl(b, k, restricted_or)
            }
        }
        Formula::And(_, _) => conj_rule(f, is_sbltl, &|g| k_special(g, k)),
        Formula::WeakUntil(_, _) | Formula::Always(_) => k_special(f, k),
        _ => false,
    }
}

/// Fragment membership with default options.
pub fn classify(f: &Formula, k: Option<&ExtRat>) -> Result<FragmentReport> {
    classify_with(f, k, ClassifyOptions::default())
}

pub fn classify_with(f: &Formula, k: Option<&ExtRat>, opts: ClassifyOptions) -> Result<FragmentReport> {
    let mut r = FragmentReport {
        bltl: is_bltl(f),
        sbltl: is_sbltl(f),
        r_stltl: r_step(f).is_some(),
        t_rultl: t_rultl(f, false, opts),
        or_t_rultl: t_rultl(f, true, opts),
        ..Default::default()
    };
    if let Some(k) = k {
        if is_special(k) {
            return Err(Error::InvalidValue(format!("k must differ from the zero and one elements, got {k}")));
        }
        r.k = Some(k.clone());
        r.k_stltl = k_step(f, k).is_some();
        r.k_t_rultl = k_rultl(f, k, false);
        r.k_or_t_rultl = k_rultl(f, k, true);
    }
    Ok(r)
}

/// The most permissive `k` for the k-indexed fragments: the least finite
/// constant of the formula (any finite value when there is none).
pub fn loosest_k(f: &Formula) -> ExtRat {
    f.constants().into_iter().find(ExtRat::is_finite).unwrap_or(ExtRat::int(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn report(s: &str, k: i64) -> FragmentReport {
        classify(&parse_formula(s).unwrap(), Some(&ExtRat::int(k))).unwrap()
    }

    #[test]
    fn always_of_step_is_k_or_fragment() {
        let r = report("G((a & 2) | (b & 3))", 2);
        assert!(r.k_or_t_rultl && r.k_t_rultl && r.or_t_rultl && r.t_rultl);
        assert!(!report("G((a & 2) | (b & 3))", 3).k_t_rultl);
    }

    #[test]
    fn strong_until_is_not_k_safe_shaped() {
        let r = report("(3 & a) U (3 & b)", 3);
        assert!(r.or_t_rultl && r.t_rultl);
        assert!(!r.k_t_rultl && !r.k_or_t_rultl);
    }

    #[test]
    fn constants_in_l_k() {
        assert!(report("5", 3).k_t_rultl);
        assert!(!report("2", 3).k_t_rultl);
        assert!(report("true", 3).k_or_t_rultl);
        assert!(!report("0", 3).k_t_rultl);
    }

    #[test]
    fn weak_until_pairs() {
        let r = report("(3 & b) W (3 & a)", 2);
        assert!(r.k_or_t_rultl && r.or_t_rultl);
        let lit = parse_formula("((3 & b) U (3 & a)) | G (3 & a)").unwrap();
        assert!(!classify(&lit, None).unwrap().or_t_rultl);
        let strict = ClassifyOptions { strict_text_or_rule: true };
        assert!(classify_with(&lit, None, strict).unwrap().or_t_rultl);
    }

    #[test]
    fn conjunction_rule_and_inclusions() {
        let f = parse_formula(
            "(!a & X b) & G((!u & 8) | (u & c & 8) | (u & !c & 10))",
        )
        .unwrap();
        let r = classify(&f, Some(&ExtRat::int(8))).unwrap();
        assert!(r.k_or_t_rultl && r.k_t_rultl);
        assert!(!report("(a & 2) | b", 2).k_or_t_rultl);
        assert!(report("(a & 2) | b", 2).k_t_rultl);
        assert!(report("a W b", 2).sbltl);
        assert!(!report("a U b", 2).sbltl && report("a U b", 2).bltl);
    }

    #[test]
    fn rejects_special_k() {
        assert!(classify(&Formula::atom("a"), Some(&ExtRat::PosInf)).is_err());
    }
}
