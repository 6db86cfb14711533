use serde::{Deserialize, Serialize};

use super::concurrence::{concurrence, concurrence_x_symmetric};
use super::discord::{
    classical_correlation_x_symmetric, discord_x_symmetric, mutual_information_x_symmetric, DiscordBranch,
};
use super::measurement::{minimize_conditional_entropy, GridResolution};
use super::mid::{mid, mid_degenerate_x_symmetric, mid_x_symmetric};
use super::xstate::SymmetricXState;
use crate::quantum_core::{DensityMatrix, Subsystem};
use crate::Result;

/// How the discord and classical correlation were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    GridSearch,
}

/// All correlation measures of one state. Entropic quantities are in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub side: Subsystem,
    pub mutual_info: f64,
    pub discord: f64,
    /// Minimal closed-form branch; `None` on the grid-search path.
    pub discord_branch: Option<DiscordBranch>,
    pub mid: f64,
    pub mid_degenerate: bool,
    pub classical: f64,
    pub concurrence: f64,
    pub method: Method,
}

/// Full report with measurements on `side`, using the default grid when the
/// state is not in the symmetric X family.
pub fn full_report(rho: &DensityMatrix, side: Subsystem) -> Result<CorrelationReport> {
    full_report_with_grid(rho, side, GridResolution::default())
}

pub fn full_report_with_grid(rho: &DensityMatrix, side: Subsystem, grid: GridResolution) -> Result<CorrelationReport> {
    if let Some(s) = SymmetricXState::from_density_matrix(rho) {
        return Ok(x_symmetric_report(&s, side));
    }
    let mutual_info = rho.mutual_information()?;
    let other = rho.partial_trace(side.other()).entropy()?;
    let opt = minimize_conditional_entropy(rho, side, grid)?;
    let m = mid(rho)?;
    Ok(CorrelationReport {
        side,
        mutual_info,
        discord: mutual_info - other + opt.value,
        discord_branch: None,
        mid: m.value,
        mid_degenerate: m.degenerate,
        classical: other - opt.value,
        concurrence: concurrence(rho)?,
        method: Method::GridSearch,
    })
}

/// Closed-form report for the symmetric X family. The family is invariant
/// under qubit exchange, so `side` only labels the report.
pub fn x_symmetric_report(s: &SymmetricXState, side: Subsystem) -> CorrelationReport {
    let (discord, branch) = discord_x_symmetric(s);
    CorrelationReport {
        side,
        mutual_info: mutual_information_x_symmetric(s),
        discord,
        discord_branch: Some(branch),
        mid: mid_x_symmetric(s),
        mid_degenerate: mid_degenerate_x_symmetric(s),
        classical: classical_correlation_x_symmetric(s, branch),
        concurrence: concurrence_x_symmetric(s),
        method: Method::ClosedForm,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(r: &CorrelationReport, expected: [f64; 5], tol: f64) {
        let got = [r.mutual_info, r.discord, r.mid, r.classical, r.concurrence];
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < tol, "{got:?} vs {expected:?}");
        }
    }

    #[test]
    fn excited_pair_has_no_correlations() {
        let r = full_report(&DensityMatrix::basis_state("ee").unwrap(), Subsystem::B).unwrap();
        assert_eq!(r.method, Method::ClosedForm);
        assert_close(&r, [0.0; 5], 1e-15);
    }

    #[test]
    fn singlet_report() {
        let r = full_report(&DensityMatrix::singlet(), Subsystem::A).unwrap();
        assert_close(&r, [2.0, 1.0, 1.0, 1.0, 1.0], 1e-12);
    }

    #[test]
    fn grid_path_for_general_states() {
        let mut m = *DensityMatrix::singlet().matrix();
        m[(1, 2)] = num_complex::Complex64::new(0.0, -0.5);
        m[(2, 1)] = num_complex::Complex64::new(0.0, 0.5);
        // (|eg> + i|ge>)/√2: local-unitarily equivalent to the singlet
        let rho = DensityMatrix::new(m).unwrap();
        let r = full_report(&rho, Subsystem::B).unwrap();
        assert_eq!(r.method, Method::GridSearch);
        assert!(r.discord_branch.is_none());
        assert_close(&r, [2.0, 1.0, 1.0, 1.0, 1.0], 1e-6);
    }

    #[test]
    fn maximally_mixed_report() {
        let r = full_report(&DensityMatrix::maximally_mixed(), Subsystem::B).unwrap();
        assert_close(&r, [0.0; 5], 1e-12);
        assert!(r.mid_degenerate);
    }
}
