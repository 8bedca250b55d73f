//! Executable checks of the center and centralizer statements, with a
//! per-step trace of the reduction and the non-normal example.

mod checks;
mod counterexample;
mod report;
mod trace;

pub use checks::{check_corollary, check_lemma_1, check_theorem_a, check_theorem_b};
pub use counterexample::{example_groups, paper_counterexample, ExampleGroups};
pub use report::{Check, CheckKind, StatementId, Verdict, VerificationReport};
pub use trace::{proof_trace_theorem_b, ALL_SUBGROUPS_LIMIT, PER_SUBGROUP_STEPS};

/// Check names used in the reports.
pub mod names {
    pub use super::counterexample::{
        FACT_CENTRALIZED, FACT_CSE, FACT_CSH, FACT_DIFFERENT, FACT_NOT_IN, FACT_R,
        FACT_SAME_SYSTEM, FACT_SYLOW,
    };
    pub use super::trace::{
        STEP_CENTRIC, STEP_CHI_INNER, STEP_COMMUTATOR, STEP_CORE, STEP_GENERATED, STEP_PHI_IN_H,
        STEP_PHI_RESTRICT, STEP_PSI_EXISTS, STEP_PSI_IN_H, STEP_PSI_ORDER, STEP_RADICAL,
        STEP_SYLOW, STEP_SYLOW_AUT, STEP_THEOREM_A, STEP_T_CENTER, STEP_T_CENTRAL, STEP_T_FIXED,
        STEP_T_IN_P, STEP_UPPER, STEP_ZG0,
    };
}
