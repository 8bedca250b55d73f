//! Fusion systems `F_U(K)` of finite permutation groups: morphisms with
//! witnesses, automizers, and the subgroup predicates behind Alperin's
//! fusion theorem.

mod automizer;
mod morphism;
mod subgroups;
mod system;

pub use automizer::{action_on, aut_induced, AutGroup};
pub use morphism::{
    commutator_with_morphism, hom_set, morphism_in_subsystem, morphism_restrict, FusionMorphism,
};
pub(crate) use subgroups::radical_given;
pub use subgroups::{
    alperin_family, automizer, f_conjugates, is_centric, is_fully_normalized, is_radical,
    AlperinMember,
};
pub use system::{fusion_system, FusionSystem};
