use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("generator `{0}` is already part of the alphabet")]
    AlphabetConflict(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("letter {0} is outside the alphabet of this group")]
    ForeignLetter(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("conjugator must not contain the stable letter `{0}`")]
    InvalidConjugator(String),
    #[error("no membership procedure for subgroup {0}")]
    Undecidable(String),
    #[error("word of length {length} exceeds the letter budget of {limit}")]
    Budget { length: usize, limit: usize },
    #[error("ball of radius {radius} holds {size} words, above the limit of {limit}")]
    BallBudget {
        radius: usize,
        size: u128,
        limit: u64,
    },
    #[error("arity mismatch: {left} generators against {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
