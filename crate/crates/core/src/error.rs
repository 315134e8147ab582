use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar literal `{literal}` for {field}")]
    Literal { literal: String, field: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Format(String),
    #[error("hypothesis failed: not dual Chevalley")]
    NotDualChevalley,
    #[error("coradical-undecidable: positive characteristic requires a declared coradical")]
    CoradicalUndecidable,
    #[error("declared coradical rejected: {0}")]
    BadDeclaredCoradical(String),
    #[error("non-split coradical: {0}")]
    NonSplitCoradical(String),
    #[error("no basic multiplicative matrix available for a simple block of size {0}")]
    MissingBasicMatrix(usize),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("element is not grouplike")]
    NotGrouplike,
    #[error("construction produced an invalid Hopf algebra: {0}")]
    Construction(String),
    #[error("hopf axiom failure: {0}")]
    Axiom(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
