//! Weighted LTL over totally ordered ω-valuation monoids, weighted Büchi
//! automata, and threshold-based decision procedures for quantitative
//! inclusion, equivalence and k-safety.

pub mod automata;
pub mod decide;
pub mod error;
pub mod io;
pub mod logic;
pub mod monoid;
pub mod semantics;
pub mod translate;

pub use automata::{Buchi, Wba};
pub use decide::{SafetyMethod, Verdict, Witness};
pub use error::{Error, Result};
pub use logic::{ClassicalFormula, Formula, FragmentReport};
pub use monoid::{ExtRat, Monoid, MonoidId, OmegaMonoid, WeightSeq};
pub use semantics::{Lasso, Letter};
pub use translate::Wts;
