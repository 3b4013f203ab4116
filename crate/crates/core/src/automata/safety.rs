use super::buchi::Buchi;
use super::inclusion::{buchi_inclusion_with, InclusionLimits};
use crate::error::Result;
use crate::semantics::Lasso;

/// The smallest safety language containing `L(a)`: the live states with
/// every one of them final.
pub fn safety_closure(a: &Buchi) -> Buchi {
    let mut c = a.trim();
    c.fin.iter_mut().for_each(|f| *f = true);
    c
}

/// Whether `L(a)` is a safety language, i.e. equals its closure.
pub fn is_safety_language(a: &Buchi) -> Result<bool> {
    Ok(safety_counterexample(a, InclusionLimits::default())?.is_none())
}

/// A word in the safety closure of `L(a)` but not in `L(a)`, if any.
pub fn safety_counterexample(a: &Buchi, limits: InclusionLimits) -> Result<Option<Lasso>> {
    buchi_inclusion_with(&safety_closure(a), a, limits)
}
