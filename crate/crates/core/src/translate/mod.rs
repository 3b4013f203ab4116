//! Constructions between formulas, weighted automata, threshold automata
//! and weighted transition systems.

mod level;
mod tableau;
mod threshold;
mod wts;

pub use level::{check_translatable, formula_to_wba, formula_to_wba_over};
pub use tableau::{ltl_to_buchi, ltl_to_buchi_over};
pub use threshold::{k3_to_k2, threshold_buchi, threshold_buchi_k1, threshold_buchi_k2, ThresholdFamily};
pub use wts::{wts_to_wba, Wts};
