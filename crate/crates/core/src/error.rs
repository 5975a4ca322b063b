use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A value required to have unit norm is off by more than the tolerance.
    #[error("expected a unit-norm value, got norm {norm}")]
    NotUnit { norm: f64 },

    #[error("expected a pure quaternion, got scalar part {scalar}")]
    NotPure { scalar: f64 },

    #[error("the zero vector has no image on the projective line")]
    ZeroVector,

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
