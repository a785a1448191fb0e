use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NotPositive(i128),
    #[error("{0} is not square-free")]
    NotSquareFree(u64),
    #[error("d must be greater than 1, got {0}")]
    DTooSmall(u64),
    #[error("x^2 - {0}y^2 = -1 has no integral solution")]
    Unsolvable(u64),
    #[error("trivial input: |a| = |b|")]
    TrivialInput,
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("bound must be at least 1")]
    InvalidBound,
}

pub type Result<T> = std::result::Result<T, Error>;
