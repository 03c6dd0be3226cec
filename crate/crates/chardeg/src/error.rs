use thiserror::Error;

#[derive(Debug, Error)]
pub enum DegreeError {
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("no usable splitting prime below the search bound")]
    NoSplittingPrime,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] permcore::GroupError),
}

pub type Result<T> = std::result::Result<T, DegreeError>;
