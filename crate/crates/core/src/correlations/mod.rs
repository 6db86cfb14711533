//! Correlation quantifiers for two-qubit states.
//!
//! Every measure has a general route working on any [`DensityMatrix`] and,
//! where one exists, a closed form for the [`SymmetricXState`] family. The
//! two are kept independent so each can check the other.
//!
//! [`DensityMatrix`]: crate::quantum_core::DensityMatrix

mod concurrence;
mod discord;
mod measurement;
mod mid;
mod report;
mod xstate;

pub use concurrence::{concurrence, concurrence_lambda_x_symmetric, concurrence_x_symmetric, ConcurrenceCase};
pub use discord::{
    classical_correlation, classical_correlation_x_symmetric, discord_d1, discord_d2, discord_min, discord_x_symmetric,
    mutual_information_x_symmetric, DiscordBranch,
};
pub use measurement::{
    conditional_entropy, minimize_conditional_entropy, GridResolution, MeasurementDirection, Optimum,
};
pub use mid::{mid, mid_degenerate_x_symmetric, mid_x_symmetric, MidValue, DEGENERACY_TOL};
pub use report::{full_report, full_report_with_grid, x_symmetric_report, CorrelationReport, Method};
pub use xstate::{GeneralXState, SymmetricXState, PATTERN_TOL};
