//! Master equation for two qubits in a common vacuum reservoir and a
//! fixed-step RK4 integrator for it.
//!
//! In units of Γ (time `τ = Γt`):
//!
//! ```text
//! dρ/dτ = −i ω₀ Σ_i [S_i^z, ρ] − i Ω₁₂ Σ_{i≠j} [S_i^+ S_j^-, ρ]
//!         − ½ Σ_ij Γ_ij (ρ S_i^+ S_j^- + S_i^+ S_j^- ρ − 2 S_j^- ρ S_i^+)
//! ```
//!
//! with `Γ_ii = 1` and `Γ_12 = Γ_21 = γ`.

use serde::Serialize;

use super::coupling::DynamicsParams;
use crate::quantum_core::{DensityMatrix, Matrix2, Matrix4};
use crate::{Error, Result};

pub const MAX_STEP: f64 = 0.01;
pub const MAX_TAU: f64 = 50.0;

/// Collective operators of the two-qubit master equation.
#[derive(Debug, Clone)]
struct Operators {
    lowering: [Matrix4; 2],
    raising: [Matrix4; 2],
    energy: [Matrix4; 2],
    /// `S_i^+ S_j^-`, indexed `[i][j]`.
    hopping: [[Matrix4; 2]; 2],
}

impl Operators {
    fn new() -> Self {
        // |g><e| with e at index 0
        let mut sigma_minus = Matrix2::zeros();
        sigma_minus[(1, 0)] = num_complex::Complex64::new(1.0, 0.0);
        let id = Matrix2::identity();
        let z = Matrix2::pauli_z();

        let lowering = [sigma_minus.kron(&id), id.kron(&sigma_minus)];
        let raising = lowering.map(|l| l.adjoint());
        let energy = [z.kron(&id), id.kron(&z)];
        let hopping = [0, 1].map(|i| [0, 1].map(|j| raising[i] * lowering[j]));
        Operators {
            lowering,
            raising,
            energy,
            hopping,
        }
    }
}

/// Right-hand side of the master equation.
#[derive(Debug, Clone)]
pub struct MasterEquation {
    params: DynamicsParams,
    ops: Operators,
}

impl MasterEquation {
    pub fn new(params: DynamicsParams) -> Self {
        MasterEquation {
            params,
            ops: Operators::new(),
        }
    }

    pub fn params(&self) -> &DynamicsParams {
        &self.params
    }

    pub fn rhs(&self, rho: &Matrix4) -> Matrix4 {
        let o = &self.ops;
        let p = &self.params;
        let minus_i = num_complex::Complex64::new(0.0, -1.0);

        let mut out = Matrix4::zeros();
        if p.omega0 != 0.0 {
            let h = (o.energy[0] + o.energy[1]).scale(p.omega0);
            out = out + h.commutator(rho).scale_complex(minus_i);
        }
        if p.omega != 0.0 {
            let exchange = (o.hopping[0][1] + o.hopping[1][0]).scale(p.omega);
            out = out + exchange.commutator(rho).scale_complex(minus_i);
        }
        for i in 0..2 {
            for j in 0..2 {
                let rate = if i == j { 1.0 } else { p.gamma };
                if rate == 0.0 {
                    continue;
                }
                let hop = &o.hopping[i][j];
                let jump = o.lowering[j] * *rho * o.raising[i];
                let term = hop.anticommutator(rho) - jump.scale(2.0);
                out = out - term.scale(0.5 * rate);
            }
        }
        out
    }
}

/// Time derivative of `rho`, including the `ω₀` term when `p.omega0 ≠ 0`.
pub fn lindblad_rhs(rho: &DensityMatrix, p: &DynamicsParams) -> Matrix4 {
    MasterEquation::new(*p).rhs(rho.matrix())
}

/// Sampled trajectory.
#[derive(Debug, Clone, Serialize)]
pub struct Trajectory {
    pub taus: Vec<f64>,
    pub states: Vec<DensityMatrix>,
}

/// Fixed-step classical RK4. By default works in the frame rotating at `ω₀`,
/// i.e. the free term is dropped; `free_evolution` puts it back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integrator {
    pub step: f64,
    pub free_evolution: bool,
}

impl Integrator {
    pub fn new(step: f64) -> Result<Self> {
        if !(step > 0.0 && step <= MAX_STEP) {
            return Err(Error::ParamOutOfRange {
                name: "step",
                value: step,
                expected: "(0, 0.01]",
            });
        }
        Ok(Integrator {
            step,
            free_evolution: false,
        })
    }

    pub fn with_free_evolution(mut self, on: bool) -> Self {
        self.free_evolution = on;
        self
    }

    fn equation(&self, p: &DynamicsParams) -> MasterEquation {
        let mut p = *p;
        if !self.free_evolution {
            p.omega0 = 0.0;
        }
        MasterEquation::new(p)
    }

    /// Every step from 0 to `tau_end`. The step is shrunk so that an integer
    /// number of steps lands exactly on `tau_end`.
    pub fn run(&self, initial: &DensityMatrix, p: &DynamicsParams, tau_end: f64) -> Result<Trajectory> {
        check_horizon(tau_end)?;
        let eq = self.equation(p);
        let n = steps_for(tau_end, self.step);
        let h = if n == 0 { 0.0 } else { tau_end / n as f64 };

        let mut taus = Vec::with_capacity(n + 1);
        let mut states = Vec::with_capacity(n + 1);
        taus.push(0.0);
        states.push(*initial);
        let mut rho = *initial;
        for k in 1..=n {
            let tau = k as f64 * h;
            rho = advance(&eq, &rho, h, tau)?;
            taus.push(tau);
            states.push(rho);
        }
        Ok(Trajectory { taus, states })
    }

    /// States at the given increasing times, starting from `initial` at
    /// `tau = 0`. Each interval is split into equal steps no longer than
    /// `self.step`.
    pub fn sample(&self, initial: &DensityMatrix, p: &DynamicsParams, taus: &[f64]) -> Result<Vec<DensityMatrix>> {
        let eq = self.equation(p);
        let mut out = Vec::with_capacity(taus.len());
        let mut rho = *initial;
        let mut now = 0.0;
        for &target in taus {
            check_horizon(target)?;
            if target < now {
                return Err(Error::ParamOutOfRange {
                    name: "tau",
                    value: target,
                    expected: "non-decreasing sample times",
                });
            }
            let n = steps_for(target - now, self.step);
            if n > 0 {
                let h = (target - now) / n as f64;
                for k in 1..=n {
                    rho = advance(&eq, &rho, h, now + k as f64 * h)?;
                }
            }
            now = target;
            out.push(rho);
        }
        Ok(out)
    }
}

/// `integrate(initial, p, tau_end, step)` in the rotating frame.
pub fn integrate(initial: &DensityMatrix, p: &DynamicsParams, tau_end: f64, step: f64) -> Result<Trajectory> {
    Integrator::new(step)?.run(initial, p, tau_end)
}

fn check_horizon(tau: f64) -> Result<()> {
    if !(0.0..=MAX_TAU).contains(&tau) {
        return Err(Error::ParamOutOfRange {
            name: "tau_end",
            value: tau,
            expected: "[0, 50]",
        });
    }
    Ok(())
}

fn steps_for(span: f64, step: f64) -> usize {
    // tolerate span/step landing a hair above an integer
    (span / step - 1e-9).ceil().max(0.0) as usize
}

fn advance(eq: &MasterEquation, rho: &DensityMatrix, h: f64, tau: f64) -> Result<DensityMatrix> {
    let y = rho.matrix();
    let k1 = eq.rhs(y);
    let k2 = eq.rhs(&(*y + k1.scale(0.5 * h)));
    let k3 = eq.rhs(&(*y + k2.scale(0.5 * h)));
    let k4 = eq.rhs(&(*y + k3.scale(h)));
    let next = *y + (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0);
    DensityMatrix::new(next).map_err(|e| Error::StateInvariantViolated {
        tau,
        source: Box::new(e),
    })
}
