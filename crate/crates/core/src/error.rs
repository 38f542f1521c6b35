use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("terms are not similar: {0}")]
    NotSimilar(String),
    #[error("symbol {0} occurs in a Pochhammer argument or length")]
    VarInPochhammer(String),
    #[error("pole encountered during evaluation")]
    PoleEncountered,
    #[error("only the trivial solution exists")]
    OnlyTrivial,
    #[error("the term is not Gosper-summable")]
    NotSummable,
    #[error("no recurrence of order at most {0}")]
    OrderExceeded(usize),
    #[error("all coefficients are zero")]
    AllZero,
    #[error("degree bound {bound} exceeds the limit {limit}")]
    DegreeBoundExceeded { bound: i64, limit: i64 },
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot lower expression: {0}")]
    Lowering(String),
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("stage {stage}: {source}")]
    Stage { stage: usize, source: Box<Error> },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
