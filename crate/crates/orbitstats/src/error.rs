use thiserror::Error;

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is not primitive")]
    NotPrimitive,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("degree {0} is not a prime power")]
    DegreeNotPrimePower(u128),
    #[error("subset size {m} exceeds k = {k}")]
    LambdaTooLarge { m: usize, k: u32 },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] permcore::GroupError),
    #[error(transparent)]
    Field(#[from] gfmatrix::FieldError),
}

pub type Result<T> = std::result::Result<T, CheckError>;
