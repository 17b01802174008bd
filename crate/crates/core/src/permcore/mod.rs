//! Permutations, enumerated groups and the subgroup operations built on them.

mod group;
pub mod ops;
mod perm;
mod product;

pub use group::{Group, Limits, Subgroup, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ORDER};
pub(crate) use group::check_parent;
pub use ops::{
    conjugacy_classes, conjugate_subgroup, core, coset_action, coset_reps, fixed_points, intermediate_subgroups,
    intersect, is_normal, is_subgroup, is_transitive, join, normal_closure, normal_subgroups, normalizer, orbits,
    transversal, CosetTable,
};
pub use perm::Permutation;
pub use product::DirectProduct;
