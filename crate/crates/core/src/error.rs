use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("valuation of zero is undefined")]
    ValuationOfZero,
    #[error("operation not available for this field family: {0}")]
    WrongFamily(String),
    #[error("degenerate lambda: {0}")]
    DegenerateLambda(String),
    #[error("trivial solution: a*b*c = 0")]
    TrivialSolution,
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("unsupported exponent {0}: need a prime p >= 5")]
    UnsupportedExponent(u64),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown report format: {0}")]
    UnknownFormat(String),
    #[error("invalid range: {0}")]
    Range(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Process exit code used by the `aflt` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::UnknownFormat(_) | Error::Range(_) | Error::Io(_) => 2,
            Error::UnsupportedField(_) | Error::WrongFamily(_) => 3,
            _ => 4,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
