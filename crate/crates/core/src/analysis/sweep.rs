use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlations::{full_report, x_symmetric_report, CorrelationReport, SymmetricXState};
use crate::dynamics::{analytic_state, dicke_state, populations_sym_antisym, PopulationPair};
use crate::quantum_core::{DensityMatrix, Subsystem};
use crate::{Error, Result};

/// State coefficients of one sample. For members of the symmetric family
/// these are exactly `(a, b, c)`; for other states `b` is the mean of the
/// two middle populations and `c` the real part of their coherence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl From<&SymmetricXState> for Coefficients {
    fn from(s: &SymmetricXState) -> Self {
        Coefficients {
            a: s.a(),
            b: s.b(),
            c: s.c(),
        }
    }
}

impl From<&DensityMatrix> for Coefficients {
    fn from(rho: &DensityMatrix) -> Self {
        Coefficients {
            a: rho.entry(0, 0).re,
            b: 0.5 * (rho.entry(1, 1).re + rho.entry(2, 2).re),
            c: rho.entry(1, 2).re,
        }
    }
}

/// Correlations along a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    pub gamma: f64,
    pub taus: Vec<f64>,
    pub coefficients: Vec<Coefficients>,
    pub reports: Vec<CorrelationReport>,
    pub populations: Vec<PopulationPair>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }
}

/// `n_points` equally spaced times on `[0, tau_max]`.
pub fn uniform_grid(tau_max: f64, n_points: usize) -> Result<Vec<f64>> {
    if n_points < 2 {
        return Err(Error::ParamOutOfRange {
            name: "n_points",
            value: n_points as f64,
            expected: ">= 2",
        });
    }
    if !(tau_max > 0.0) || !tau_max.is_finite() {
        return Err(Error::ParamOutOfRange {
            name: "tau_max",
            value: tau_max,
            expected: "> 0",
        });
    }
    let last = (n_points - 1) as f64;
    Ok((0..n_points).map(|k| tau_max * k as f64 / last).collect())
}

/// Analytic trajectory of the initially excited pair, with closed-form
/// correlations at every point.
pub fn sweep(gamma: f64, tau_max: f64, n_points: usize, side: Subsystem) -> Result<TimeSeries> {
    crate::dynamics::check_gamma(gamma)?;
    sweep_family(gamma, tau_max, n_points, side, |tau| analytic_state(gamma, tau))
}

/// Same as [`sweep`] in the zero-separation (Dicke) limit.
pub fn dicke_sweep(tau_max: f64, n_points: usize, side: Subsystem) -> Result<TimeSeries> {
    sweep_family(1.0, tau_max, n_points, side, dicke_state)
}

fn sweep_family(
    gamma: f64,
    tau_max: f64,
    n_points: usize,
    side: Subsystem,
    state_at: impl Fn(f64) -> Result<SymmetricXState> + Sync,
) -> Result<TimeSeries> {
    let taus = uniform_grid(tau_max, n_points)?;
    let states = taus.par_iter().map(|&tau| state_at(tau)).collect::<Result<Vec<_>>>()?;
    Ok(TimeSeries {
        gamma,
        coefficients: states.iter().map(Coefficients::from).collect(),
        reports: states.iter().map(|s| x_symmetric_report(s, side)).collect(),
        populations: states.iter().map(populations_sym_antisym).collect(),
        taus,
    })
}

/// Series for arbitrary states, e.g. an integrated trajectory. States outside
/// the symmetric family go through the grid-search discord.
pub fn series_from_states(gamma: f64, taus: Vec<f64>, states: &[DensityMatrix], side: Subsystem) -> Result<TimeSeries> {
    if taus.len() != states.len() {
        return Err(Error::ParamOutOfRange {
            name: "states",
            value: states.len() as f64,
            expected: "one state per time",
        });
    }
    let reports = states
        .par_iter()
        .map(|rho| full_report(rho, side))
        .collect::<Result<Vec<_>>>()?;
    Ok(TimeSeries {
        gamma,
        coefficients: states.iter().map(Coefficients::from).collect(),
        populations: states.iter().map(PopulationPair::from_density_matrix).collect(),
        reports,
        taus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independent_environments_stay_uncorrelated() {
        let s = sweep(0.0, 10.0, 200, Subsystem::B).unwrap();
        for r in &s.reports {
            for v in [r.mutual_info, r.discord, r.mid, r.classical, r.concurrence] {
                assert!(v.abs() < 1e-10);
            }
        }
    }

    #[test]
    fn entanglement_is_delayed() {
        let s = sweep(0.8806, 10.0, 1001, Subsystem::B).unwrap();
        let first = s.reports.iter().position(|r| r.concurrence > 0.0).unwrap();
        assert!(first > 10);
        assert!(s.reports[..first].iter().all(|r| r.concurrence == 0.0));
        assert!(s.reports[first..].iter().all(|r| r.concurrence > 0.0));
    }

    #[test]
    fn dicke_limit_never_entangles() {
        let s = dicke_sweep(10.0, 500, Subsystem::A).unwrap();
        assert!(s.reports.iter().all(|r| r.concurrence == 0.0));
        let s = sweep(1.0, 10.0, 500, Subsystem::A).unwrap();
        assert!(s.reports.iter().all(|r| r.concurrence == 0.0));
    }

    #[test]
    fn grid_and_argument_checks() {
        assert_eq!(uniform_grid(1.0, 3).unwrap(), vec![0.0, 0.5, 1.0]);
        assert!(uniform_grid(1.0, 1).is_err());
        assert!(sweep(1.5, 1.0, 10, Subsystem::A).is_err());
    }

    #[test]
    fn general_series_matches_closed_forms_on_the_family() {
        let taus = vec![0.0, 0.5, 2.0];
        let states: Vec<_> = taus
            .iter()
            .map(|&t| analytic_state(0.6, t).unwrap().to_density_matrix().unwrap())
            .collect();
        let general = series_from_states(0.6, taus, &states, Subsystem::B).unwrap();
        let closed = sweep(0.6, 2.0, 5, Subsystem::B).unwrap();
        assert!((general.reports[2].discord - closed.reports[4].discord).abs() < 1e-12);
        assert_eq!(general.coefficients[1], closed.coefficients[1]);
    }
}
