//! New structures from old, and generators for concrete examples.

mod extension;
mod functions;
mod simple;

pub use extension::{adjoin_identity, canonical_extension, star_extension, CanonicalExtension, Extension};
pub use functions::{
    all_partial_functions, cx_fixed_domain, gen_codx, gen_codx_with_cap, gen_cx, gen_cx_with_cap, gen_sx,
    gen_sx_with_cap, CodFunction, FunctionCategory, FunctionConstellation, PartialFunction, CODX_MAX_N, CX_MAX_N,
    SX_MAX_N,
};
pub use simple::{count_codx, count_cx, from_monoid, from_quasiorder};
