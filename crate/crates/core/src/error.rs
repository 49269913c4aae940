use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} is not a prime >= 3")]
    NotPrime(u64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("hyperplane {second} duplicates hyperplane {first}")]
    DuplicateHyperplane { first: usize, second: usize },

    #[error("hyperplane on line {second} duplicates the hyperplane on line {first}")]
    DuplicateLine { first: usize, second: usize },

    #[error("hyperplane {0} has a zero normal vector")]
    ZeroNormal(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("flat {0} does not belong to the poset")]
    UnknownFlat(usize),

    #[error("cannot restrict to a point: the flat has dimension 0")]
    RestrictToPoint,

    #[error("elliptic duality dimension requires a non-empty arrangement")]
    EmptyElliptic,

    #[error("invalid corank {r} for dimension {n}")]
    InvalidCorank { n: usize, r: usize },

    #[error("the subset is not a nested set")]
    NotNested,

    #[error("invalid building set: {0}")]
    InvalidBuildingSet(String),

    #[error("arrangement is not complexified-real")]
    NotReal,

    #[error("arrangement too large for face enumeration: {0}")]
    TooLarge(String),

    #[error("character value for hyperplane {0} is zero")]
    ZeroCharacter(usize),

    #[error("character has {found} values but the arrangement has {expected} hyperplanes")]
    CharacterLength { expected: usize, found: usize },

    #[error("character prime {found} does not match field prime {expected}")]
    PrimeMismatch { expected: u64, found: u64 },

    #[error("exponent vector {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),

    #[error("layer {0} has dimension 0")]
    ZeroDimLayer(usize),

    #[error("invalid orbit configuration: {0}")]
    InvalidOrbitSpec(String),

    #[error("{0}")]
    Usage(String),
}
