use thiserror::Error;

/// Failure decoding a graph6 record.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the printable range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed length header ({reason})")]
    BadHeader { offset: usize, reason: &'static str },
    #[error("byte {offset}: record has {found} body bytes, expected {expected}")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    NonzeroPadding { offset: usize },
    #[error("graph6 supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Invalid graph construction request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("family `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error("edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
}

/// Errors from the integer polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("divisor must be monic")]
    NotMonic,
    #[error("expected a polynomial of degree between {min} and {max}, got {found}")]
    DegreeOutOfRange { min: usize, max: usize, found: usize },
}

/// Errors from the strongly walk-regular decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwrError {
    #[error("walk length {0} is excluded; every graph is strongly 1-walk-regular")]
    ExcludedLength(u32),
    #[error("walk length {0} must be odd")]
    EvenLength(u32),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has a single distinct eigenvalue")]
    SingleEigenvalue,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Errors from the eigenvalue parameter-space tools.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("walk length {0} must be odd")]
    EvenLength(u32),
    #[error("walk length must be at least {min}, got {found}")]
    LengthTooSmall { min: u32, found: u32 },
    #[error("empty range [{lo}, {hi}]")]
    EmptyRange { lo: i64, hi: i64 },
    #[error("eigenvalues must be pairwise distinct")]
    Coincident,
    #[error("tolerance must be positive and finite")]
    BadTolerance,
    #[error("invalid feasibility input: {0}")]
    BadInput(String),
}
