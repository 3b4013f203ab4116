//! Quantitative inclusion and equivalence of weighted automata, the
//! formula-versus-automaton decision procedure, and k-safety.

use std::collections::BTreeSet;
use std::fmt;

use crate::automata::{buchi_inclusion_with, safety_counterexample, InclusionLimits, Wba};
use crate::error::{Error, Result};
use crate::logic::{classify, Formula};
use crate::monoid::{ExtRat, Monoid};
use crate::semantics::Lasso;
use crate::translate::{check_translatable, formula_to_wba_over, threshold_buchi, ThresholdFamily};

/// A lasso on which the two sides take different values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub lasso: Lasso,
    pub left: ExtRat,
    pub right: ExtRat,
    /// The threshold whose inclusion check produced the lasso.
    pub threshold: ExtRat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    pub thresholds_checked: Vec<ExtRat>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", if self.holds { "yes" } else { "no" })?;
        let ts: Vec<String> = self.thresholds_checked.iter().map(|v| v.to_string()).collect();
        writeln!(f, "thresholds={}", ts.join(","))?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness={}", w.lasso)?;
            writeln!(f, "left={}", w.left)?;
            writeln!(f, "right={}", w.right)?;
            writeln!(f, "at_threshold={}", w.threshold)?;
        }
        Ok(())
    }
}

/// Tunables shared by the decision procedures.
#[derive(Clone, Debug, Default)]
pub struct DecideOptions {
    pub inclusion: InclusionLimits,
    /// Thresholds checked in addition to the weights of the automata.
    pub extra_thresholds: Vec<ExtRat>,
}

fn values(a: &Wba, opts: &DecideOptions) -> BTreeSet<ExtRat> {
    a.image().into_iter().chain(opts.extra_thresholds.iter().cloned()).filter(|v| !v.is_neg_inf()).collect()
}

fn same_alphabet(a: &Wba, b: &Wba) -> Result<(Wba, Wba)> {
    if a.monoid != b.monoid {
        return Err(Error::MonoidMismatch(format!("{} vs {}", a.monoid, b.monoid)));
    }
    let aps: Vec<String> = a.aps().iter().chain(b.aps()).cloned().collect::<BTreeSet<_>>().into_iter().collect();
    Ok((a.widen(&aps)?, b.widen(&aps)?))
}

/// For each `v`, checks `L(A≥v) ⊆ L(B≥v)` and stops at the first failure.
fn threshold_loop(a: &Wba, b: &Wba, vs: &BTreeSet<ExtRat>, opts: &DecideOptions, checked: &mut Vec<ExtRat>) -> Result<Option<Witness>> {
    for v in vs {
        checked.push(v.clone());
        let (ta, tb) = (threshold_buchi(a, v)?, threshold_buchi(b, v)?);
        if let Some(lasso) = buchi_inclusion_with(&ta, &tb, opts.inclusion)? {
            let left = ThresholdFamily::new(a)?.behavior(&lasso);
            let right = ThresholdFamily::new(b)?.behavior(&lasso);
            return Ok(Some(Witness { lasso, left, right, threshold: v.clone() }));
        }
    }
    Ok(None)
}

fn verdict(witness: Option<Witness>, thresholds_checked: Vec<ExtRat>) -> Verdict {
    Verdict { holds: witness.is_none(), witness, thresholds_checked }
}

/// `‖a‖ ≤ ‖b‖` pointwise.
pub fn quantitative_inclusion(a: &Wba, b: &Wba) -> Result<Verdict> {
    quantitative_inclusion_with(a, b, DecideOptions::default())
}

pub fn quantitative_inclusion_with(a: &Wba, b: &Wba, opts: DecideOptions) -> Result<Verdict> {
    let (a, b) = same_alphabet(a, b)?;
    let mut checked = Vec::new();
    let w = threshold_loop(&a, &b, &values(&a, &opts), &opts, &mut checked)?;
    Ok(verdict(w, checked))
}

/// `‖a‖ = ‖b‖`.
pub fn quantitative_equivalence(a: &Wba, b: &Wba) -> Result<Verdict> {
    quantitative_equivalence_with(a, b, DecideOptions::default())
}

pub fn quantitative_equivalence_with(a: &Wba, b: &Wba, opts: DecideOptions) -> Result<Verdict> {
    let (a, b) = same_alphabet(a, b)?;
    let mut checked = Vec::new();
    if let Some(w) = threshold_loop(&a, &b, &values(&a, &opts), &opts, &mut checked)? {
        return Ok(verdict(Some(w), checked));
    }
    let w = threshold_loop(&b, &a, &values(&b, &opts), &opts, &mut checked)?.map(|w| Witness {
        left: w.right,
        right: w.left,
        ..w
    });
    Ok(verdict(w, checked))
}

/// Whether `‖f‖ = ‖a‖`, for `f` in the `k`-indexed fragment of the monoid.
/// The left side of a witness is the formula's value.
pub fn decide_formula_automaton(f: &Formula, a: &Wba, k: &ExtRat) -> Result<Verdict> {
    decide_formula_automaton_with(f, a, k, DecideOptions::default())
}

pub fn decide_formula_automaton_with(f: &Formula, a: &Wba, k: &ExtRat, opts: DecideOptions) -> Result<Verdict> {
    let m = a.monoid;
    let r = classify(f, Some(k))?;
    let member = match m {
        Monoid::K1 => r.k_t_rultl,
        Monoid::K2 | Monoid::K3 => r.k_or_t_rultl,
    };
    if !member {
        let name = if m == Monoid::K1 { "k-t-RULTL" } else { "k-or-t-RULTL" };
        return Err(Error::OutsideFragment(format!("{f} is not in {name} for k = {k}")));
    }
    check_translatable(f, m)?;
    let aps: Vec<String> = f.atoms().into_iter().chain(a.aps().iter().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let af = formula_to_wba_over(f, m, &aps)?;
    quantitative_equivalence_with(&af, a, opts)
}

/// Whether `{w : ‖a‖(w) ≥ k}` is a safety language.
pub fn is_k_safe_wba(a: &Wba, k: &ExtRat) -> Result<bool> {
    Ok(k_safety_counterexample(a, k, InclusionLimits::default())?.is_none())
}

/// A word outside `{w : ‖a‖(w) ≥ k}` all of whose prefixes extend into it,
/// if there is one.
pub fn k_safety_counterexample(a: &Wba, k: &ExtRat, limits: InclusionLimits) -> Result<Option<Lasso>> {
    if k.is_neg_inf() || k.is_pos_inf() {
        return Err(Error::InvalidValue(format!("k must differ from the zero and one elements, got {k}")));
    }
    safety_counterexample(&threshold_buchi(a, k)?, limits)
}

/// How [`is_k_safe_formula`] reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SafetyMethod {
    /// Membership in a k-indexed fragment, all of whose formulas are k-safe.
    Fragment,
    /// Translation to an automaton and a safety-closure check.
    Closure,
}

impl fmt::Display for SafetyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SafetyMethod::Fragment => "fragment",
            SafetyMethod::Closure => "closure",
        })
    }
}

pub fn is_k_safe_formula(f: &Formula, k: &ExtRat, m: Monoid) -> Result<(bool, SafetyMethod)> {
    let r = classify(f, Some(k))?;
    let member = match m {
        Monoid::K1 => r.k_t_rultl,
        Monoid::K2 | Monoid::K3 => r.k_t_rultl || r.k_or_t_rultl,
    };
    if member {
        return Ok((true, SafetyMethod::Fragment));
    }
    is_k_safe_formula_by_closure(f, k, m).map(|b| (b, SafetyMethod::Closure))
}

/// The semantic check alone, without the fragment shortcut.
pub fn is_k_safe_formula_by_closure(f: &Formula, k: &ExtRat, m: Monoid) -> Result<bool> {
    let aps: Vec<String> = f.atoms().into_iter().collect();
    is_k_safe_wba(&formula_to_wba_over(f, m, &aps)?, k)
}
