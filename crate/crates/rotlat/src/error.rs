use thiserror::Error;

/// Errors produced by construction and validation of finite algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("poset has {size} points, maximum supported is {max}")]
    PosetTooLarge { size: usize, max: usize },

    #[error("relation pair ({i}, {j}) is out of range for size {size}")]
    PairOutOfRange { i: usize, j: usize, size: usize },

    #[error("not a poset: elements {i} and {j} lie on a cycle")]
    CycleDetected { i: usize, j: usize },

    #[error("lattice would have {size} elements, cap is {cap}")]
    ElementCapExceeded { size: usize, cap: usize },

    #[error("not a lattice: elements {i} and {j} have no {op}")]
    NotALattice { i: usize, j: usize, op: &'static str },

    #[error("lattice tables violate {law} at ({i}, {j})")]
    BadTables { law: &'static str, i: usize, j: usize },

    #[error("operation requires a distributive lattice")]
    NotDistributive,

    #[error("map is not a permutation of 0..{size}")]
    BadPermutation { size: usize },

    #[error("permutation is not a lattice automorphism: fails at pair ({x}, {y})")]
    NotAutomorphism { x: usize, y: usize },

    #[error("element {element} is not stable under the rotation")]
    NotStable { element: usize },

    #[error("map is not a homomorphism: fails on {op} at ({x}, {y})")]
    NotHomomorphism {
        x: usize,
        y: usize,
        op: &'static str,
    },

    #[error("partition is not a congruence: {reason}")]
    InvalidCongruence { reason: String },

    #[error("element set is not a subuniverse: not closed at {witness}")]
    InvalidSubuniverse { witness: usize },

    #[error("generating set must be nonempty")]
    EmptyGeneratingSet,

    #[error("product of an empty family is not defined here")]
    EmptyProduct,

    #[error("size {size} exceeds the oracle cap {cap} for {what}")]
    OracleCapExceeded {
        size: usize,
        cap: usize,
        what: &'static str,
    },

    #[error("cube dimension must be at least 1")]
    ZeroDimension,

    #[error("{m} does not divide {n}")]
    NotDivisible { m: usize, n: usize },

    #[error("set is not divisor-closed: contains {member} but not its divisor {missing}")]
    InvalidIdeal { member: usize, missing: usize },

    #[error("ideal members must be positive")]
    NonPositiveIdealMember,

    #[error(
        "classification violated: subdirectly irreducible factor of size {size} is not a \
         rotational cube (this indicates a bug, not a property of the input)"
    )]
    TheoremViolation { size: usize },

    #[error("invalid document: {reason}")]
    BadDocument { reason: String },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
