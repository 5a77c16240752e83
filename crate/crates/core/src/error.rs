use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partial order")]
    NotPartialOrder,

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("ground set must be nonempty")]
    EmptyGroundSet,

    #[error("ground set of size {n} exceeds the limit of {limit} for {what}")]
    TooLarge { n: usize, limit: usize, what: &'static str },

    #[error("poset is not naturally labeled")]
    NotNaturallyLabeled,

    #[error("{0:?} is not a poset ideal")]
    NotAnIdeal(Vec<usize>),

    #[error("{0:?} is not a filter")]
    NotAFilter(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("operation not defined for polytope kind {0}")]
    UnsupportedKind(&'static str),

    #[error("ordinal sum needs at least one nonempty block")]
    EmptyBlocks,

    #[error("map has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
