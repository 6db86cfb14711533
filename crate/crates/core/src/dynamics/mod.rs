//! Couplings from geometry, the analytic two-qubit solution and the
//! master-equation integrator.

mod analytic;
mod coupling;
mod lindblad;

pub use analytic::{analytic_state, dicke_state, populations_sym_antisym, PopulationPair};
pub use coupling::{coupling_from_geometry, CouplingGeometry, DynamicsParams, MIN_SEPARATION};
pub use lindblad::{integrate, lindblad_rhs, Integrator, MasterEquation, Trajectory, MAX_STEP, MAX_TAU};

pub(crate) use analytic::check_gamma;
