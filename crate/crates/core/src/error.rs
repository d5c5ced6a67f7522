use crate::exactalg::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} generator(s), found {found}")]
    Arity { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    #[error("degree mismatch: expected {expected}, found {found}")]
    Degree { expected: usize, found: usize },

    #[error("not cyclic: span dimension {span_dim} < {n}")]
    NotCyclic { span_dim: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {needed} candidates > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
