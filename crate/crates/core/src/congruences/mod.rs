//! Congruences, quotients and canonical congruences.

mod canonical;
mod quotient;
mod reconstruction;
mod report;

pub use canonical::{
    canonical_closure, enumerate_canonical, enumerate_congruences, full_relation_canonical, is_canonically_simple,
    is_canonically_simple_category, kernel, maximal_canonical, maximal_canonical_with_normal_quotient,
    maximal_elements, principal_canonical, relatability, KernelRelation, MaximalCanonical, Simplicity,
    SimplicityCheck, ENUMERATION_LIMIT,
};
pub use quotient::{
    class_labels, largest_projection_separating, lift_partition, push_partition, quotient, quotient_map, Quotient,
};
pub use reconstruction::{
    canonical_reconstruction, canonical_tilde, delta_category_of, is_delta_functor, DeltaCategory, Reconstruction,
};
pub use report::{
    analyze_partition, category_canonical_by_range, satisfies_canonical_clauses,
    satisfies_category_canonical_clauses, CongruenceFailure, CongruenceReport,
};
