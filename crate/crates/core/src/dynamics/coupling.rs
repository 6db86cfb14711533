use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Pair geometry: separation in units of the transition wavelength and the
/// cosine between the (parallel) dipole moments and the separation vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingGeometry {
    separation: f64,
    dipole_cosine: f64,
}

/// Separations below this belong to the Dicke limit.
pub const MIN_SEPARATION: f64 = 1e-6;

impl CouplingGeometry {
    pub fn new(separation: f64, dipole_cosine: f64) -> Result<Self> {
        if !(separation > MIN_SEPARATION) || !separation.is_finite() {
            return Err(Error::ParamOutOfRange {
                name: "separation",
                value: separation,
                expected: "> 1e-6 wavelengths",
            });
        }
        if !(-1.0..=1.0).contains(&dipole_cosine) {
            return Err(Error::ParamOutOfRange {
                name: "dipole_cosine",
                value: dipole_cosine,
                expected: "[-1, 1]",
            });
        }
        Ok(CouplingGeometry {
            separation,
            dipole_cosine,
        })
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn dipole_cosine(&self) -> f64 {
        self.dipole_cosine
    }

    /// `k₀ r₁₂`.
    pub fn phase(&self) -> f64 {
        2.0 * PI * self.separation
    }
}

/// Master-equation parameters in units of the single-qubit decay rate Γ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DynamicsParams {
    /// Collective damping `Γ₁₂/Γ`.
    pub gamma: f64,
    /// Dipole-dipole shift `Ω₁₂/Γ`.
    pub omega: f64,
    /// Transition frequency `ω₀/Γ`; only the integrator's free term uses it.
    pub omega0: f64,
}

impl DynamicsParams {
    pub fn new(gamma: f64, omega: f64) -> Result<Self> {
        if !(gamma.abs() <= 1.0) {
            return Err(Error::ParamOutOfRange {
                name: "gamma",
                value: gamma,
                expected: "[-1, 1]",
            });
        }
        if !omega.is_finite() {
            return Err(Error::ParamOutOfRange {
                name: "omega",
                value: omega,
                expected: "finite",
            });
        }
        Ok(DynamicsParams {
            gamma,
            omega,
            omega0: 0.0,
        })
    }

    pub fn with_omega0(mut self, omega0: f64) -> Self {
        self.omega0 = omega0;
        self
    }
}

/// Collective damping and dipole-dipole shift of two identical dipoles in
/// free space, both relative to Γ.
pub fn coupling_from_geometry(g: &CouplingGeometry) -> DynamicsParams {
    let x = g.phase();
    let cos2 = g.dipole_cosine * g.dipole_cosine;
    let (s, c) = x.sin_cos();
    let transverse = 1.0 - cos2;
    let longitudinal = 1.0 - 3.0 * cos2;

    let gamma = 1.5 * (transverse * s / x + longitudinal * (c / (x * x) - s / (x * x * x)));
    let omega = 0.75 * (-transverse * c / x + longitudinal * (s / (x * x) + c / (x * x * x)));
    DynamicsParams {
        gamma,
        omega,
        omega0: 0.0,
    }
}
