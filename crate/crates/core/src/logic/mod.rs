//! Weighted LTL syntax, fragments and threshold formulas.

mod formula;
mod fragment;
mod parse;
mod threshold;

pub use formula::{desugar_weak_until, negate_classical, nnf, ClassicalFormula, Formula};
pub use fragment::{
    classify, classify_with, is_bltl, is_sbltl, k_step, loosest_k, r_step, to_classical, ClassifyOptions,
    FragmentReport, StepAtom,
};
pub use parse::{parse_classical, parse_formula};
pub use threshold::{boolean_abstraction, candidate_values, threshold_formula};
