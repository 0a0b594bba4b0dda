use thiserror::Error;

/// Errors surfaced by the numerical layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("matrix is not antisymmetric (max deviation {0:.3e})")]
    NotAntisymmetric(f64),

    #[error("all amplitudes are zero; cannot normalize")]
    ZeroState,

    #[error("state is not normalized: 2 Tr PP\u{2020} = {0}")]
    NotNormalized(f64),

    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),

    #[error("value {value} out of range for {what}")]
    OutOfRange { value: f64, what: &'static str },

    #[error("internal consistency check failed: {0}")]
    ConsistencyFailure(String),

    #[error("state is maximally entangled (eta = {0}); projectors are singular")]
    MaximallyEntangled(f64),

    #[error("closed-form spectrum disagrees with the eigensolver oracle by {0:.3e}")]
    OracleMismatch(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
