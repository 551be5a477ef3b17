//! Structure-preserving maps.

mod canonical;
mod cayley;
mod iso;
mod radiant;

pub use canonical::{canonical_functor, projection_radiant, universal_functor, UniversalFunctor, UNIQUENESS_LIMIT};
pub use cayley::{cayley_embedding, CayleyEmbedding};
pub use iso::{find_category_isomorphism, find_delta_isomorphism, find_isomorphism};
pub use radiant::{
    check_full, check_functor, check_projection_separating, check_radiant, check_strong, compose_maps, identity_map,
    kernel_partition, MorphismWitness, RadiantFailure,
};
