//! The tightened monogamy and polygamy inequalities, their baselines, and
//! the grouping search they depend on.

mod alpha;
mod grouping;
mod optimize;
mod profile;
mod report;
pub mod scalar;
mod theorems;

pub use alpha::AlphaGrid;
pub use grouping::{
    feasibility, ordered_partitions, sort_descending_then_check, walk_ordered_partitions, Dominance,
    Grouping, OrderingCertificate,
};
pub use optimize::{optimize_grouping, FeasibilityMode, StateAnalysis, MAX_FREE};
pub use profile::{cut_value, free_qubits, CutMeasure, StateProfile};
pub use report::{BoundReport, BoundStatus, Objective, TheoremId};
pub use scalar::{
    h_weight, lemma_check, pow_alpha, tightened_step_lower, tightened_step_upper, SLACK_TOLERANCE,
};
pub use theorems::{
    ckw_check, coa_dual_check, cor1_lower, cor2_bounds, jin_upper, thm1_upper, thm2_lower, thm3_lower,
    thm4_upper, thm5_upper, thm6_lower, thm7_lower, thm8_upper, Cor1Variant, CorGroupings, Foci,
};
