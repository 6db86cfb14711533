//! Fixed-size complex linear algebra and information-theoretic primitives.

mod eigen;
mod matrix;
mod projectors;
mod state;

pub use eigen::{hermitian_eigensystem, hermitian_eigenvalues, EigenSystem};
pub use matrix::{CMatrix, Matrix2, Matrix4};
pub use projectors::{apply_local_projectors, ProjectorPair};
pub use state::{
    entropy_of_spectrum, shannon, validate, xlog2x, DensityMatrix, ReducedState, Subsystem, BASIS, HERMITIAN_TOL,
    POSITIVITY_TOL, TRACE_TOL,
};

#[cfg(test)]
pub(crate) use state::partial_trace_matrix;
