//! Totally ordered ω-valuation monoids over extended rationals and pairs.

mod axioms;
mod extrat;
mod seq;
mod valuation;

pub use axioms::{check_axioms, liminf_monotonicity_counterexample, AxiomCheck, AxiomReport, SampleMonoid};
pub use extrat::ExtRat;
pub use seq::WeightSeq;
pub use valuation::{liminf_val, limsup_val, sup_val, Monoid, MonoidId, NatInf, OmegaMonoid, PairLex, PairValue};
