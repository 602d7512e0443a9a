use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,

    #[error("zero polynomial has no canonical form")]
    ZeroPolynomial,

    #[error("evaluation at 0 of a polynomial with negative exponents")]
    EvalAtZeroWithNegativeExponents,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("minor size {k} exceeds matrix dimensions {rows}x{cols}")]
    MinorTooLarge { k: usize, rows: usize, cols: usize },

    #[error("Seifert matrix has odd dimension {dim}")]
    OddSeifertDimension { dim: usize },

    #[error("genus unknown: Seifert matrix is not asserted to be minimal genus")]
    GenusNotAsserted,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("closure of the braid is a link with {components} components, not a knot")]
    NotAKnotClosure { components: usize },

    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidLetterOutOfRange { letter: i64, strands: usize },

    #[error("relator `{relator}` has phi-weight {weight}, expected 0")]
    RelatorWeightNonzero { relator: String, weight: i64 },

    #[error("phi is not surjective onto Z (gcd of values is {gcd})")]
    PhiNotSurjective { gcd: i64 },

    #[error("presentation has no generator with nonzero phi value")]
    NoAdmissibleColumn,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid record at `{path}`: {message}")]
    Record { path: String, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no (1+t)^N multiplier with N <= {cap} yields nonnegative coefficients")]
    CertificateCapExceeded { cap: u32 },

    #[error("polynomial has a positive real root, so no positivity certificate exists")]
    HasPositiveRoot,

    #[error("exact division left a nonzero remainder (internal error)")]
    InexactDivision,

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
