use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("node list is empty")]
    EmptyNodes,

    #[error("duplicate node {value}: input positions {first} and {second}")]
    DuplicateNode {
        value: String,
        first: usize,
        second: usize,
    },

    #[error("stage count {got} is invalid: {reason}")]
    StageCount { got: usize, reason: &'static str },

    #[error("not a collocation polynomial: {0}")]
    InvalidPi(String),

    #[error("exact nodes required, got numerical input")]
    NotExact,

    #[error("stage system is singular (1/(ah) is an eigenvalue of A)")]
    SingularStageSystem,

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
