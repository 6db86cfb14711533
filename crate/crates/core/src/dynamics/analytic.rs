use serde::{Deserialize, Serialize};

use crate::correlations::SymmetricXState;
use crate::quantum_core::DensityMatrix;
use crate::{Error, Result};

/// State at `tau` of two initially excited qubits with collective damping
/// `gamma`:
///
/// ```text
/// a = e^{−2τ}
/// b = A + B,   c = −A + B
/// A = [e^{−(1−γ)τ} − e^{−2τ}] (1−γ) / (2(1+γ))
/// B = [e^{−(1+γ)τ} − e^{−2τ}] (1+γ) / (2(1−γ))
/// ```
///
/// `B` is evaluated as `e^{−2τ} expm1((1−γ)τ) (1+γ) / (2(1−γ))`, which stays
/// accurate as `γ → 1`; `γ = 1` itself is the Dicke solution.
pub fn analytic_state(gamma: f64, tau: f64) -> Result<SymmetricXState> {
    check_gamma(gamma)?;
    check_tau(tau)?;
    let slow = 1.0 - gamma;
    if slow == 0.0 {
        return dicke_state(tau);
    }
    let fast = 1.0 + gamma;
    let a = (-2.0 * tau).exp();
    let sub = ((-slow * tau).exp() - a) * slow / (2.0 * fast);
    let sup = a * (slow * tau).exp_m1() * fast / (2.0 * slow);
    SymmetricXState::new(a, sub + sup, sup - sub)
}

/// Zero-separation limit: `a = e^{−2τ}`, `b = c = τ e^{−2τ}`.
pub fn dicke_state(tau: f64) -> Result<SymmetricXState> {
    check_tau(tau)?;
    let a = (-2.0 * tau).exp();
    SymmetricXState::new(a, tau * a, tau * a)
}

pub(crate) fn check_gamma(gamma: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::ParamOutOfRange {
            name: "gamma",
            value: gamma,
            expected: "[0, 1]",
        });
    }
    Ok(())
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::ParamOutOfRange {
            name: "tau",
            value: tau,
            expected: ">= 0",
        });
    }
    Ok(())
}

/// Populations of `(|eg> ± |ge>)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PopulationPair {
    pub symmetric: f64,
    pub antisymmetric: f64,
}

impl PopulationPair {
    /// Works for any two-qubit state: `(ρ_eg,eg + ρ_ge,ge ± 2 Re ρ_eg,ge) / 2`.
    pub fn from_density_matrix(rho: &DensityMatrix) -> Self {
        let mean = 0.5 * (rho.entry(1, 1).re + rho.entry(2, 2).re);
        let coherence = rho.entry(1, 2).re;
        PopulationPair {
            symmetric: mean + coherence,
            antisymmetric: mean - coherence,
        }
    }
}

pub fn populations_sym_antisym(s: &SymmetricXState) -> PopulationPair {
    PopulationPair {
        symmetric: s.b() + s.c(),
        antisymmetric: s.b() - s.c(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::concurrence_x_symmetric;

    #[test]
    fn starts_doubly_excited() {
        for gamma in [0.0, 0.5, 0.8806, 1.0] {
            let s = analytic_state(gamma, 0.0).unwrap();
            assert_eq!((s.a(), s.b(), s.c()), (1.0, 0.0, 0.0));
        }
    }

    #[test]
    fn independent_environments() {
        for tau in [0.1f64, 1.0, 3.7, 20.0] {
            let s = analytic_state(0.0, tau).unwrap();
            let (e1, e2) = ((-tau).exp(), (-2.0 * tau).exp());
            assert!((s.a() - e2).abs() < 1e-15);
            assert!((s.b() - (e1 - e2)).abs() < 1e-15);
            assert!(s.c().abs() < 1e-15);
        }
    }

    #[test]
    fn near_dicke_limit_is_continuous() {
        let near = analytic_state(1.0 - 1e-9, 1.0).unwrap();
        let dicke = dicke_state(1.0).unwrap();
        assert!((near.a() - dicke.a()).abs() < 1e-6);
        assert!((near.b() - dicke.b()).abs() < 1e-6);
        assert!((near.c() - dicke.c()).abs() < 1e-6);
    }

    #[test]
    fn dicke_values() {
        let s = dicke_state(0.5).unwrap();
        let e = (-1.0f64).exp();
        assert!((s.a() - e).abs() < 1e-16 && (s.b() - 0.5 * e).abs() < 1e-16 && s.b() == s.c());
        for k in 0..=1000 {
            assert_eq!(concurrence_x_symmetric(&dicke_state(0.01 * k as f64).unwrap()), 0.0);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(analytic_state(-0.1, 1.0).is_err());
        assert!(analytic_state(1.1, 1.0).is_err());
        assert!(analytic_state(0.5, -1.0).is_err());
        assert!(dicke_state(f64::NAN).is_err());
    }

    #[test]
    fn population_pairs() {
        let s = SymmetricXState::new(0.2, 0.3, 0.3).unwrap();
        assert_eq!(
            populations_sym_antisym(&s),
            PopulationPair {
                symmetric: 0.6,
                antisymmetric: 0.0
            }
        );
        let s = SymmetricXState::new(0.2, 0.3, -0.3).unwrap();
        assert_eq!(
            populations_sym_antisym(&s),
            PopulationPair {
                symmetric: 0.0,
                antisymmetric: 0.6
            }
        );
        let general = PopulationPair::from_density_matrix(&s.to_density_matrix().unwrap());
        assert!((general.antisymmetric - 0.6).abs() < 1e-15 && general.symmetric.abs() < 1e-15);
    }

    #[test]
    fn antisymmetric_population_decays_at_subradiant_rate() {
        let gamma = 0.946;
        let p = |tau| populations_sym_antisym(&analytic_state(gamma, tau).unwrap()).antisymmetric;
        let rate = (p(25.0) / p(15.0)).ln() / 10.0;
        assert!((rate + (1.0 - gamma)).abs() < 1e-9, "{rate}");
    }
}
