use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("frame mismatch: {0:?} vs {1:?}")]
    FrameMismatch(Vec<String>, Vec<String>),

    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),

    #[error("missing assignment for `{0}`")]
    MissingAssignment(String),

    #[error("division by zero in `{0}`")]
    DivisionByZero(String),

    #[error("singular flag matrix")]
    SingularFlag,

    #[error("dependent basis")]
    DependentBasis,

    #[error("candidate basis is not an integral element (level {0})")]
    NotIntegral(usize),

    #[error("degree-0 form has no contraction")]
    DegreeZeroContraction,

    #[error("{0}")]
    BadInput(String),

    #[error("binomial dimension formula is valid only for involutive tableaux")]
    NotInvolutive,

    #[error("degenerate point: {0}")]
    DegeneratePoint(String),

    #[error("operation requires {0} mode")]
    ModeMismatch(&'static str),

    #[error("sample point violates relation `{0}`")]
    RelationViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
