//! Permutations and permutation groups.

mod chain;
mod group;
mod ops;
mod perm;

pub use group::PermGroup;
pub use ops::{
    build_group, center, centralizer, conjugacy_orbit, conjugate_subgroup, intersection, is_normal,
    join, normal_closure, normalizer, right_transversal,
};
pub(crate) use perm::gcd;
pub use perm::Permutation;
