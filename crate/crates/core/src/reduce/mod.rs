//! PH reductions: the replacement operator, candidate-set bookkeeping,
//! strategies, the elimination loop and solution lifting.

mod candidates;
mod engine;
mod gadget;
mod lift;
mod operator;
mod strategy;
mod trace;

pub use candidates::{reduce_candidate_set, CandidateSet};
pub use engine::{eliminate_all, Eliminator, EngineStats, ReductionStep, ReductionTrace, StepOutcome};
pub use gadget::NonProper2Clique;
pub use lift::{color_count, is_proper_coloring, is_stable_set, lift_coloring, lift_stable_set};
pub use operator::{ph_reduce, Placement};
pub use strategy::{Collapse, MaxClique, PairView, StableSet, Strategy, StrategyData, StrategyKind};
pub use trace::{GraphDocument, StepDocument, TraceDocument, TRACE_FORMAT, TRACE_VERSION};
