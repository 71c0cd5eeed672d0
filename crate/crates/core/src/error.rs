use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a bijection: {0}")]
    NotABijection(String),
    #[error("empty token in permutation text")]
    EmptyToken,
    #[error("mixed separators in permutation text: {0:?}")]
    MixedFormat(String),
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("permutation too long ({0} entries, at most 255 supported)")]
    TooLong(usize),
    #[error("pattern must be nonempty")]
    EmptyPattern,

    #[error("n = {n} exceeds the generation cap {max}")]
    LimitExceeded { n: usize, max: usize },
    #[error("expected an even-length permutation, got length {0}")]
    OddInput(usize),

    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series has a zero constant term")]
    ZeroConstantTerm,
    #[error("series constant term is not 1")]
    ConstantTermNotOne,
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("nearest-integer decision not reached for n = {0}")]
    PrecisionExhausted(usize),

    #[error("{perm} is not in {family}")]
    NotInFamily { perm: String, family: String },
    #[error("malformed structure: {0}")]
    MalformedStructure(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("no explicit construction registered for {0}")]
    UnknownFamily(String),
    #[error("no structural template registered for {0}")]
    UnknownShape(String),
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
