//! Finite constellations and categories given by partial multiplication
//! tables: axiom checking, constructions, radiants and congruences.

pub mod axioms;
pub mod congruences;
pub mod constructions;
pub mod derived;
pub mod error;
pub mod format;
pub mod magma;
pub mod morphisms;
pub mod partition;
pub mod structure;

pub use axioms::{verify_category, verify_constellation, verify_constellation_alt, Axiom, ViolationReport};
pub use error::{ConstructionError, CongruenceError, FormatError, MagmaError, MorphismError, VerifyError};
pub use format::{parse_document, parse_partition, parse_structure, Document, PartitionDocument, StructureDocument, StructureKind};
pub use magma::{Elem, PartialMagma};
pub use partition::Partition;
pub use structure::{Category, Constellation};
