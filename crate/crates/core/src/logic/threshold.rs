use crate::error::{Error, Result};
use crate::monoid::{ExtRat, Monoid};

use super::formula::{ClassicalFormula as C, Formula};
use super::fragment::{is_bltl, r_step, to_classical, StepAtom};

fn beta_nonzero(atoms: &[StepAtom]) -> C {
    C::or_all(atoms.iter().map(|a| a.guard.clone()))
}

fn beta_at_least(atoms: &[StepAtom], v: &ExtRat) -> C {
    C::or_all(atoms.iter().filter(|a| &a.weight >= v).map(|a| a.guard.clone()))
}

fn all_at_least(atoms: &[StepAtom], v: &ExtRat) -> bool {
    atoms.iter().all(|a| &a.weight >= v)
}

fn step_of(f: &Formula) -> Result<Vec<StepAtom>> {
    r_step(f).ok_or_else(|| Error::OutsideFragment(format!("expected a step formula, found {f}")))
}

/// `⋁ (k_i ∧ φ_i) ↦ ⋁ φ_i`, lifted through `W`, `G` and `U`.
pub fn boolean_abstraction(f: &Formula) -> Result<C> {
    let b = |x: &Formula| step_of(x).map(|a| beta_nonzero(&a));
    match f {
        Formula::WeakUntil(x, y) => Ok(C::weak_until(b(x)?, b(y)?)),
        Formula::Until(x, y) => Ok(C::until(b(x)?, b(y)?)),
        Formula::Always(x) => Ok(C::always(b(x)?)),
        _ => b(f),
    }
}

/// Values the formula can take other than zero: its constants plus the
/// one element, in descending order.
pub fn candidate_values(f: &Formula) -> Vec<ExtRat> {
    let mut vs = f.constants();
    vs.insert(ExtRat::PosInf);
    vs.remove(&ExtRat::NegInf);
    vs.into_iter().rev().collect()
}

/// A classical formula satisfied exactly by the words on which `f`
/// evaluates to at least `v`.
///
/// Step formulas never take the value `inf`, so along `G α` and `α U ψ` with
/// step operands every weight sequence has infinitely many finite entries
/// (for `G`) or is finite-then-`inf` (for each term of `U`). This is what
/// makes the per-monoid rules below exact.
pub fn threshold_formula(f: &Formula, v: &ExtRat, monoid: Monoid) -> Result<C> {
    if v.is_neg_inf() {
        return Err(Error::InvalidValue("thresholds must differ from the zero element".into()));
    }
    threshold(f, v, monoid)
}

fn threshold(f: &Formula, v: &ExtRat, m: Monoid) -> Result<C> {
    if let Formula::Const(k) = f {
        return Ok(if k >= v { C::True } else { C::False });
    }
    if is_bltl(f) {
        return Ok(to_classical(f).expect("boolean formula"));
    }
    if let Some(atoms) = r_step(f) {
        return Ok(beta_at_least(&atoms, v));
    }
    match f {
        Formula::Or(a, b) => Ok(C::or(threshold(a, v, m)?, threshold(b, v, m)?)),
        Formula::And(a, b) => Ok(C::and(threshold(a, v, m)?, threshold(b, v, m)?)),
        Formula::Next(a) => Ok(C::next(threshold(a, v, m)?)),
        Formula::Always(a) => {
            let s = step_of(a)?;
            Ok(always_rule(&s, v, m))
        }
        Formula::Until(a, b) => {
            let (sa, sb) = (step_of(a)?, step_of(b)?);
            Ok(until_rule(&sa, &sb, v, m))
        }
        Formula::WeakUntil(a, b) => {
            let (sa, sb) = (step_of(a)?, step_of(b)?);
            if all_at_least(&sa, v) && all_at_least(&sb, v) {
                Ok(C::weak_until(beta_nonzero(&sa), beta_nonzero(&sb)))
            } else {
                Ok(C::or(always_rule(&sa, v, m), until_rule(&sa, &sb, v, m)))
            }
        }
        _ => Err(Error::OutsideFragment(format!("no threshold rule for {f}"))),
    }
}

fn always_rule(s: &[StepAtom], v: &ExtRat, m: Monoid) -> C {
    let ne = C::always(beta_nonzero(s));
    // Every value along the run is at least v as soon as none is zero.
    if all_at_least(s, v) {
        return ne;
    }
    let ge = beta_at_least(s, v);
    let tail = match m {
        Monoid::K1 => C::eventually(C::always(ge)),
        Monoid::K2 => C::always(C::eventually(ge)),
        Monoid::K3 => C::eventually(ge),
    };
    C::and(ne, tail)
}

fn until_rule(a: &[StepAtom], b: &[StepAtom], v: &ExtRat, m: Monoid) -> C {
    let (ne_a, ne_b) = (beta_nonzero(a), beta_nonzero(b));
    if all_at_least(a, v) && all_at_least(b, v) {
        return C::until(ne_a, ne_b);
    }
    let (ge_a, ge_b) = (beta_at_least(a, v), beta_at_least(b, v));
    match m {
        // Each term is the minimum over a finite non-zero window.
        Monoid::K1 => C::until(ge_a, ge_b),
        // Each term is the maximum over the window: either the last entry or
        // some earlier entry reaches v.
        Monoid::K2 | Monoid::K3 => C::or(
            C::until(ne_a.clone(), ge_b),
            C::until(ne_a.clone(), C::and(ge_a, C::next(C::until(ne_a, ne_b)))),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{parse_classical, parse_formula};

    fn thr(s: &str, v: i64, m: Monoid) -> C {
        threshold_formula(&parse_formula(s).unwrap(), &ExtRat::int(v), m).unwrap()
    }

    #[test]
    fn weak_until_at_its_own_level() {
        assert_eq!(thr("(3 & b) W (3 & a)", 3, Monoid::K2), parse_classical("b W a").unwrap());
    }

    #[test]
    fn always_over_liminf() {
        assert_eq!(thr("G((a & 2) | (b & 3))", 3, Monoid::K1), parse_classical("G (a | b) & F G b").unwrap());
        assert_eq!(thr("G((a & 2) | (b & 3))", 3, Monoid::K2), parse_classical("G (a | b) & G F b").unwrap());
    }

    #[test]
    fn constants_compare() {
        assert_eq!(thr("5", 7, Monoid::K2), C::False);
        assert_eq!(thr("5", 5, Monoid::K2), C::True);
    }

    #[test]
    fn abstraction() {
        let b = |s: &str| boolean_abstraction(&parse_formula(s).unwrap()).unwrap();
        assert_eq!(b("(3 & b) W (3 & a)"), parse_classical("b W a").unwrap());
        assert_eq!(b("(2 & a) | (3 & b)"), parse_classical("a | b").unwrap());
        assert_eq!(b("G (2 & a)"), parse_classical("G a").unwrap());
        assert!(boolean_abstraction(&parse_formula("G a").unwrap()).is_err());
    }

    #[test]
    fn candidates() {
        let c = |s: &str| candidate_values(&parse_formula(s).unwrap());
        assert_eq!(c("G((a & 2) | (b & 3))"), vec![ExtRat::PosInf, ExtRat::int(3), ExtRat::int(2)]);
        assert_eq!(c("true"), vec![ExtRat::PosInf]);
        assert_eq!(c("(3 & a) U (3 & b)"), vec![ExtRat::PosInf, ExtRat::int(3)]);
    }
}
