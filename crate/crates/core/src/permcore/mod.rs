//! Exact permutation-group engine.

mod blocks;
mod bsgs;
mod group;
mod hom;
mod partition;
mod perm;
mod structure;
mod sylow;

pub use blocks::{classify_transitive_degree8, is_primitive, minimal_blocks, Degree8Class};
pub use bsgs::Elements;
pub use group::{standard, PermGroup};
pub use hom::{induced_action_on_partition, kernel_on_partition, local_restriction, ActionHom};
pub use partition::Partition;
pub use perm::Permutation;
pub use structure::{
    center, commutator_subgroup, conjugacy_class, derived_series, is_quasiprimitive, is_solvable,
    minimal_normal_subgroup, normal_closure,
};
pub use sylow::{element_of_order_p, sylow_subgroup};

/// Default element-enumeration budget.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
