use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("pair ({0}, {1}) is not contractible")]
    NotContractible(usize, usize),
    #[error("invalid decomposition: {0}")]
    Structure(String),
    #[error("decomposition precondition violated: {0}")]
    Construction(String),
    #[error("treewidth search exceeded its node budget of {0}")]
    Timeout(u64),
    #[error("oracle budget exceeded: {0}")]
    Budget(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
