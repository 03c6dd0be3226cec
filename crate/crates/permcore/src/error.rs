use thiserror::Error;

/// Errors produced by permutation and group operations.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image array of length {degree} is not a bijection")]
    NotBijection { degree: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is not primitive")]
    NotPrimitive,
    #[error("degree {0} exceeds the subset-work limit of 64")]
    SubsetDegreeLimit(usize),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
