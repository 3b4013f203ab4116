//! Unweighted and weighted Büchi automata over letters `2^AP`.

mod buchi;
mod complement;
mod graph;
mod inclusion;
mod omega;
mod safety;
mod simulation;
mod ts;
mod wba;

pub use buchi::Buchi;
pub use complement::{buchi_complement, ComplementLimits};
pub use graph::{bfs_path, reachable, scc, Explorer};
pub use inclusion::{buchi_inclusion, buchi_inclusion_via_complement, buchi_inclusion_with, InclusionLimits};
pub use omega::{muller_to_buchi, rabin_to_buchi, Muller, Rabin, RabinPair};
pub use ts::{LassoProduct, Sym, Ts, MAX_APS};
pub use safety::{is_safety_language, safety_closure, safety_counterexample};
pub use wba::{normalize_wba, wba_behavior, Wba};
pub use simulation::{direct_simulation, reduce};
