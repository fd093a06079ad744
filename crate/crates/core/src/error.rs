use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division left a nonzero remainder")]
    NonExactDivision,

    #[error("multinomial parts sum to {parts_sum}, expected {total}")]
    PartsMismatch { total: u64, parts_sum: u64 },

    #[error("invalid character '{ch}' at position {position}")]
    InvalidCharacter { ch: char, position: usize },

    #[error("invalid path family: {0}")]
    InvalidFamily(String),

    #[error("invalid step order \"{0}\": expected \"X<Y<Z\" with {{X,Y,Z}} = {{E,D,N}}")]
    InvalidOrder(String),

    #[error("path ends at ({0}, {1}), not on the diagonal")]
    NotASquarePath(u64, u64),

    #[error("word is empty")]
    EmptyWord,

    #[error("position {index} out of range for a word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not a bad path: {0}")]
    NotABadPath(String),

    #[error("path ends at ({0}, {1}), expected an endpoint of the form (n+1, n-1)")]
    WrongEndpoint(u64, u64),
}

pub type Result<T> = std::result::Result<T, Error>;
