use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus is not irreducible of the requested degree")]
    ReducibleModulus,
    #[error("field of order {0} is too large for table arithmetic")]
    FieldTooLarge(u64),
    #[error("Las Vegas retry budget exhausted: {0}")]
    RandomnessExhausted(&'static str),
    #[error("polynomial has no root in the given algebra")]
    NoRoot,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bimap is degenerate")]
    Degenerate,
    #[error("bimap is neither symmetric nor alternating")]
    NotSymmetricOrAlternating,
    #[error("structure constants are not alternating")]
    NotAlternating,
    #[error("field degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("subring is not contained in the adjoint ring")]
    NotAdjoint,
    #[error("operation requires a square bimap (a = b)")]
    NotSquare,
    #[error("characteristic 2 is not supported here")]
    CharTwo,
    #[error("matrix is singular")]
    Singular,
    #[error("orbit exceeded cap of {0}")]
    OrbitCapExceeded(usize),
    #[error("group closure exceeded cap of {0}")]
    ClosureCapExceeded(usize),
    #[error("enumeration exceeded cap of {0}")]
    CapExceeded(usize),
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    /// Stable machine-readable code used by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPrime(_) => "NonPrime",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::FieldTooLarge(_) => "FieldTooLarge",
            Error::RandomnessExhausted(_) => "RandomnessExhausted",
            Error::NoRoot => "NoRoot",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Degenerate => "Degenerate",
            Error::NotSymmetricOrAlternating => "NotSymmetricOrAlternating",
            Error::NotAlternating => "NotAlternating",
            Error::DegreeMismatch(..) => "DegreeMismatch",
            Error::NotAdjoint => "NotAdjoint",
            Error::NotSquare => "NotSquare",
            Error::CharTwo => "CharTwo",
            Error::Singular => "Singular",
            Error::OrbitCapExceeded(_) => "OrbitCapExceeded",
            Error::ClosureCapExceeded(_) => "ClosureCapExceeded",
            Error::CapExceeded(_) => "CapExceeded",
            Error::Input(_) => "Input",
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrbitCapExceeded(_) | Error::ClosureCapExceeded(_) | Error::CapExceeded(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

