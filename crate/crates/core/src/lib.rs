//! Correlation measures and dissipative dynamics for two dipole-coupled qubits.
//!
//! The crate is split along the computation pipeline:
//!
//! - [`quantum_core`]: fixed-size Hermitian linear algebra, density matrices,
//!   entropies, partial traces and local projective measurements.
//! - [`correlations`]: concurrence, quantum discord, measurement-induced
//!   disturbance (MID) and classical correlations, each with an X-state closed
//!   form and a general numerical route.
//! - [`dynamics`]: collective damping and dipole-dipole shift from the pair
//!   geometry, the analytic solution for two initially excited qubits, and an
//!   RK4 master-equation integrator.
//! - [`analysis`]: time sweeps and event detection (entanglement onset, the
//!   MID = discord window, reduced-state degeneracy, asymptotic decay rates).
//!
//! All states use the product basis `|ee>, |eg>, |ge>, |gg>`; entropies are in
//! bits and time is the dimensionless `tau = Gamma * t`.

#![forbid(unsafe_code)]
// `!(x > lo)` is used on purpose so that NaN inputs are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod correlations;
pub mod dynamics;
mod error;
pub mod quantum_core;

pub use error::{Error, Result};
