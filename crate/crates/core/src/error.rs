use thiserror::Error;

use crate::algebra::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is outside the supported range 2 <= p < 2^31")]
    ModulusOutOfRange(u64),

    #[error("cannot parse field spec {0:?} (expected \"Q\" or \"GF(p)\")")]
    ParseField(String),

    #[error("cannot parse scalar {input:?} over {field}")]
    ParseScalar { input: String, field: Field },

    #[error("dimension must be at least 2, found {0}")]
    DimensionTooSmall(usize),

    #[error("duplicate element at position {index} (equal to position {first})")]
    Duplicate { index: usize, first: usize },

    #[error("the zero vector does not determine a projective point")]
    ZeroPoint,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("size {size} exceeds the limit of {cap}")]
    SizeLimit { size: usize, cap: usize },

    #[error("need at least {required} elements, found {found}")]
    TooFewElements { required: usize, found: usize },

    #[error("set spans a subspace of rank {rank}, not the whole space of dimension {dim}")]
    NotSpanning { rank: usize, dim: usize },

    #[error("permutation {0:?} has no extension")]
    NoExtension(Vec<usize>),

    #[error("image of x is not proportional to y")]
    NotCollinear,

    #[error("point set is not a simplex of the required size")]
    NotSimplex,

    #[error("matrix is singular")]
    Singular,

    #[error("group order {order} exceeds the search budget {budget}")]
    BudgetExceeded { order: u128, budget: u128 },

    #[error("{what} exceeds the cap of {cap} elements")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("operation requires a prime field, got {0}")]
    UnsupportedField(Field),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
