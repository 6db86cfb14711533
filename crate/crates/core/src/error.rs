use thiserror::Error;

/// Errors raised by state validation, numerical kernels and the event finders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("trace is not one (trace = {trace:.15})")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive (smallest eigenvalue = {eigenvalue:e})")]
    NotPositive { eigenvalue: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("projector pair is not complete and orthogonal (deviation {deviation:e})")]
    IncompleteProjectorSet { deviation: f64 },

    #[error("every measurement outcome has vanishing probability")]
    DegenerateInput,

    #[error("invalid X-state coefficients: {0}")]
    InvalidXState(String),

    #[error("parameter {name} = {value} is out of range ({expected})")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("measurement grid {theta}x{phi} is below the 64x128 minimum")]
    GridTooCoarse { theta: usize, phi: usize },

    #[error("state left the physical set at tau = {tau}: {source}")]
    StateInvariantViolated {
        tau: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("non-positive value {value:e} at tau = {tau} cannot be log-fitted")]
    NonPositiveData { tau: f64, value: f64 },

    #[error("fit window [{lo}, {hi}] is invalid for the series")]
    InvalidWindow { lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
