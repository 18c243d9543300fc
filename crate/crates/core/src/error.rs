use thiserror::Error;

/// Errors raised by construction, verification and I/O routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("empty table")]
    EmptyTable,
    #[error("element 0 is not a two-sided identity (fails at element {element})")]
    NoIdentityAtZero { element: usize },
    #[error("table is not a Latin square: {line} {index} repeats value {value}")]
    NotLatinSquare { line: &'static str, index: usize, value: usize },
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("codomain mismatch: {0}")]
    CodomainMismatch(String),
    #[error("group of order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("instance mismatch: {0}")]
    InstanceMismatch(String),
    #[error("stability bound {bound} is smaller than |B| = {base}")]
    BoundTooSmall { bound: usize, base: usize },
    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid action morphism: {0}")]
    InvalidMorphism(String),
    #[error("no morphism with the requested components: {0}")]
    NoSuchMorphism(String),
    #[error("not a crossed module: equation {equation} fails at {witness}")]
    NotACrossedModule { equation: &'static str, witness: String },
    #[error("not a Whitehead sequence: {0}")]
    NotAWhiteheadSequence(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("L-condition failure: {0}")]
    LConditionFailure(String),
    #[error("cartesian factorization failure: {0}")]
    FactorizationFailure(String),
    #[error("pullback condition fails at level {level}: {detail}")]
    WStarFailure { level: usize, detail: String },
    #[error("not a groupoid: {0}")]
    NotAGroupoid(String),
    #[error("no isomorphism found: {0}")]
    NoIsomorphismFound(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError { line: usize, column: usize, message: String },
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("unsupported format version {found:?} (expected {expected:?})")]
    VersionMismatch { found: String, expected: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// The variant name, used to label wrapped invariant failures.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::EmptyTable => "EmptyTable",
            Error::NoIdentityAtZero { .. } => "NoIdentityAtZero",
            Error::NotLatinSquare { .. } => "NotLatinSquare",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::CodomainMismatch(_) => "CodomainMismatch",
            Error::OrderTooLarge { .. } => "OrderTooLarge",
            Error::InstanceMismatch(_) => "InstanceMismatch",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::BoundExceeded(_) => "BoundExceeded",
            Error::InvalidAction(_) => "InvalidAction",
            Error::InvalidMorphism(_) => "InvalidMorphism",
            Error::NoSuchMorphism(_) => "NoSuchMorphism",
            Error::NotACrossedModule { .. } => "NotACrossedModule",
            Error::NotAWhiteheadSequence(_) => "NotAWhiteheadSequence",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::LConditionFailure(_) => "LConditionFailure",
            Error::FactorizationFailure(_) => "FactorizationFailure",
            Error::WStarFailure { .. } => "WStarFailure",
            Error::NotAGroupoid(_) => "NotAGroupoid",
            Error::NoIsomorphismFound(_) => "NoIsomorphismFound",
            Error::ParseError { .. } => "ParseError",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::VersionMismatch { .. } => "VersionMismatch",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
