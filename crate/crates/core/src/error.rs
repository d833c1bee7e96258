use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("infeasible grouping: {0}")]
    InfeasibleGrouping(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("unknown state family `{0}`")]
    UnknownFamily(String),

    #[error("malformed state description: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
