use thiserror::Error;

pub type Result<T> = std::result::Result<T, FusionError>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FusionError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("ring fails the fusion axioms: {0}")]
    NotVerified(String),
    #[error("not two-orbit: found {orbits} orbits")]
    NotTwoOrbit { orbits: usize },
    #[error("not two-dimension: {0}")]
    NotTwoDimension(String),
    #[error("theta inconsistent: {0}")]
    ThetaInconsistent(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("group must be abelian")]
    NonAbelian,
    #[error("associativity failure at (i, j, k, l) = ({i}, {j}, {k}, {l})")]
    AssociativityFailure { i: usize, j: usize, k: usize, l: usize },
    #[error("invalid character table: {0}")]
    InvalidCharacterTable(String),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("certification failed at width {0}")]
    CertificationFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
