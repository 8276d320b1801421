use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scenario has {0} observables; vertex enumeration is limited to 24")]
    ScenarioTooLarge(usize),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertices(String),

    #[error(
        "polytope is not full-dimensional (affine dimension {affine} in ambient dimension \
         {ambient}); project the vertices onto their affine hull first"
    )]
    DegeneratePolytope { affine: usize, ambient: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max |A - A^H| entry {0:e})")]
    NotHermitian(f64),

    #[error("matrix dimension {0} exceeds the eigensolver limit of 64")]
    MatrixTooLarge(usize),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("monomial {0:?} is not a pair of observables")]
    UnsupportedMonomialOrder(Vec<usize>),

    #[error("invalid observable pair ({0}, {1})")]
    InvalidPair(usize, usize),

    #[error("no planar CHSH angle convention reproduces the reference eigenvectors (best residual {0:e})")]
    ConventionNotFound(f64),

    #[error("invalid urn distribution: {0}")]
    InvalidUrn(String),

    #[error("closed-form eigenvalue {closed} not found in spectrum (nearest {nearest})")]
    ClosedFormMismatch { closed: f64, nearest: f64 },
}

impl Error {
    /// True for failures of the numerical engines, as opposed to bad input.
    pub fn is_numeric_failure(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::DegeneratePolytope { .. }
                | Error::ClosedFormMismatch { .. }
                | Error::ConventionNotFound(_)
        )
    }
}
