use thiserror::Error;

use crate::axioms::ViolationReport;
use crate::magma::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagmaError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("element {index} has an empty label")]
    EmptyLabel { index: usize },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element `{0}`")]
    UnknownLabel(String),
    #[error("product `{left} . {right}` defined twice")]
    DuplicateProduct { left: String, right: String },
    #[error("table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
}

/// Why a table was rejected as a constellation or category.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("element `{label}` has {} right identities e with e·x = x (need exactly one)", candidates.len())]
    AmbiguousDomain {
        element: Elem,
        label: String,
        candidates: Vec<Elem>,
    },
    #[error("supplied D(`{label}`) = `{supplied_label}` but the table forces `{derived_label}`")]
    DomainMismatch {
        element: Elem,
        label: String,
        supplied: Elem,
        supplied_label: String,
        derived: Elem,
        derived_label: String,
    },
    #[error("domain map has {got} entries for {expected} elements")]
    DomainShape { expected: usize, got: usize },
    #[error("domain map sends element {element} out of range")]
    DomainOutOfRange { element: Elem },
    #[error("{0}")]
    Axioms(ViolationReport),
}

impl VerifyError {
    pub fn report(&self) -> Option<&ViolationReport> {
        match self {
            VerifyError::Axioms(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{generator} with n = {n} exceeds the size cap n <= {cap}")]
    SizeCap {
        generator: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("count overflows 128-bit integers")]
    Overflow,
    #[error("(Cat1) fails at ({x}, {y}, {z})")]
    Cat1Violated { x: String, y: String, z: String },
    #[error("relation is not a quasiorder: {0}")]
    NotQuasiorder(String),
    #[error("table is not a monoid: {0}")]
    NotMonoid(String),
    #[error("seed set is empty")]
    EmptySeed,
    #[error("subset must be a nonempty proper subset of the {n} points")]
    BadSubset { n: usize },
    #[error(transparent)]
    Magma(#[from] MagmaError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("map has {got} entries for a source of size {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("map sends element {element} to {image}, outside the target")]
    MapOutOfRange { element: Elem, image: Elem },
    #[error("map is not a radiant")]
    NotARadiant,
    #[error("carrier sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
}

/// Which of the three relatability conditions fails for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unrelatable {
    DomainsDiffer,
    RangesEqual,
    KernelsDiffer,
}

impl std::fmt::Display for Unrelatable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Unrelatable::DomainsDiffer => "D(a) != D(b)",
            Unrelatable::RangesEqual => "R(a) = R(b)",
            Unrelatable::KernelsDiffer => "ker(a) != ker(b)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("partition: {0}")]
    BadPartition(String),
    #[error("partition is not a congruence")]
    NotACongruence,
    #[error("classes [{left}] and [{right}] have products in different classes")]
    WellDefinednessClash { left: String, right: String },
    #[error("a and b must be distinct")]
    EqualElements,
    #[error("no canonical congruence relates the pair: {0}")]
    NotRelatable(Unrelatable),
    #[error("carrier of size {size} exceeds the enumeration cap {limit}")]
    SizeCap { size: usize, limit: usize },
    #[error("first partition is not contained in the second")]
    NotNested,
    #[error("partition is not a projection-separating congruence")]
    NotProjectionSeparating,
    #[error("constellation is not composable (element `{0}`)")]
    NotComposable(String),
    #[error("partition is not a canonical congruence")]
    NotCanonical,
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// A text-format error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub kind: FormatErrorKind,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatErrorKind {
    Syntax,
    Semantic,
}
