use thiserror::Error;

/// Errors raised at the boundaries of the algebra: configuration, value and
/// formula input. The algebra itself is total once its inputs are valid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hedge index {index} out of range 0..={n}")]
    HedgeOutOfRange { index: u32, n: u32 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid truth value `{0}`")]
    InvalidValue(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("atom `{0}` is unassigned")]
    UnassignedAtom(String),

    #[error("invalid assignment `{0}`, expected NAME=v<grade><T|F>")]
    InvalidAssignment(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
