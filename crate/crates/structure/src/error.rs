use thiserror::Error;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("prime {0} does not divide the group order {1}")]
    PrimeDoesNotDivide(u64, u128),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Group(#[from] permcore::GroupError),
    #[error(transparent)]
    Degree(#[from] chardeg::DegreeError),
    #[error(transparent)]
    Check(#[from] orbitstats::CheckError),
    #[error(transparent)]
    Field(#[from] gfmatrix::FieldError),
}

pub type Result<T> = std::result::Result<T, StructureError>;
