//! One-qubit projective measurements and the conditional-entropy search
//! shared by the discord and classical-correlation oracles.
//!
//! The search scans a `θ × φ` grid over the Bloch sphere, then runs a 2-D
//! Nelder–Mead from the best grid cell. Rows of the grid are evaluated in
//! parallel and reduced in row order, so the result does not depend on the
//! number of worker threads.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quantum_core::{shannon, DensityMatrix, Matrix2, ProjectorPair, Subsystem};
use crate::{Error, Result};

/// Outcomes below this probability are dropped from the conditional entropy.
const MIN_OUTCOME_PROBABILITY: f64 = 1e-12;

/// Measurement axis `n = (sinθ cosφ, sinθ sinφ, cosθ)`, defining the pair
/// `½(I ± n·σ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementDirection {
    theta: f64,
    phi: f64,
}

impl MeasurementDirection {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::ParamOutOfRange {
                name: "theta",
                value: theta,
                expected: "[0, pi]",
            });
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::ParamOutOfRange {
                name: "phi",
                value: phi,
                expected: "[0, 2pi)",
            });
        }
        Ok(MeasurementDirection { theta, phi })
    }

    /// Canonical angles for arbitrary (possibly out-of-range) inputs.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        Self::from_bloch(bloch(theta, phi))
    }

    pub fn from_bloch(n: [f64; 3]) -> Self {
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        let theta = (n[2] / len).clamp(-1.0, 1.0).acos();
        let mut phi = n[1].atan2(n[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        MeasurementDirection { theta, phi }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        bloch(self.theta, self.phi)
    }

    pub fn projectors(&self) -> ProjectorPair {
        ProjectorPair::from_bloch(self.bloch_vector())
    }
}

fn bloch(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

/// Resolution of the Bloch-sphere scan. `theta` counts polar samples
/// including both poles; `phi` counts azimuthal samples on `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridResolution {
    pub theta: usize,
    pub phi: usize,
}

impl GridResolution {
    pub const MIN: GridResolution = GridResolution { theta: 64, phi: 128 };

    pub fn new(theta: usize, phi: usize) -> Result<Self> {
        let g = GridResolution { theta, phi };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<()> {
        if self.theta < Self::MIN.theta || self.phi < Self::MIN.phi {
            return Err(Error::GridTooCoarse {
                theta: self.theta,
                phi: self.phi,
            });
        }
        Ok(())
    }

    fn theta_step(&self) -> f64 {
        PI / (self.theta - 1) as f64
    }

    fn phi_step(&self) -> f64 {
        2.0 * PI / self.phi as f64
    }
}

impl Default for GridResolution {
    fn default() -> Self {
        Self::MIN
    }
}

/// Nelder–Mead stopping rule: spread of the simplex values.
const SIMPLEX_FTOL: f64 = 1e-10;
const SIMPLEX_MAX_ITER: usize = 200;

/// Result of a measurement optimization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Optimum {
    pub value: f64,
    pub direction: MeasurementDirection,
}

/// Precomputed pieces for `Σ_j p_j S(ρ_other | Π_j)` with `Π_j` acting on
/// the measured qubit.
pub(crate) struct ConditionalEntropy {
    rho: [[num_complex::Complex64; 4]; 4],
    measured: Subsystem,
    other_reduced: Matrix2,
}

impl ConditionalEntropy {
    pub(crate) fn new(rho: &DensityMatrix, measured: Subsystem) -> Self {
        ConditionalEntropy {
            rho: rho.matrix().0,
            measured,
            other_reduced: *rho.partial_trace(measured.other()).matrix(),
        }
    }

    /// Unnormalized `Tr_measured[(Π ⊗ I) ρ]` (or `I ⊗ Π`), which equals the
    /// conditional block since `Π² = Π`.
    fn conditional_block(&self, p: &Matrix2) -> Matrix2 {
        let r = &self.rho;
        Matrix2::from_fn(|i, k| {
            let mut acc = num_complex::Complex64::new(0.0, 0.0);
            for j in 0..2 {
                for m in 0..2 {
                    acc += match self.measured {
                        Subsystem::B => p.0[j][m] * r[2 * i + m][2 * k + j],
                        Subsystem::A => p.0[j][m] * r[2 * m + i][2 * j + k],
                    };
                }
            }
            acc
        })
    }

    pub(crate) fn evaluate(&self, n: [f64; 3]) -> f64 {
        let pair = ProjectorPair::from_bloch(n);
        let plus = self.conditional_block(&pair.projectors()[0]);
        let minus = self.other_reduced - plus;
        outcome_entropy(&plus) + outcome_entropy(&minus)
    }
}

/// `p S(σ/p)` with `p = Tr σ`, zero for negligible outcomes.
fn outcome_entropy(sigma: &Matrix2) -> f64 {
    let p = sigma.trace().re;
    if p < MIN_OUTCOME_PROBABILITY {
        return 0.0;
    }
    let [l0, l1] = qubit_spectrum(sigma);
    p * shannon(&[l0 / p, l1 / p])
}

/// Eigenvalues of a 2×2 Hermitian matrix, computed in closed form.
fn qubit_spectrum(m: &Matrix2) -> [f64; 2] {
    let a = m.0[0][0].re;
    let d = m.0[1][1].re;
    let half_gap = (0.25 * (a - d) * (a - d) + m.0[0][1].norm_sqr()).sqrt();
    let mean = 0.5 * (a + d);
    [mean + half_gap, mean - half_gap]
}

/// Minimizes `Σ_j p_j S(ρ_other | Π_j)` over projective measurements on
/// `measured`.
pub fn minimize_conditional_entropy(rho: &DensityMatrix, measured: Subsystem, grid: GridResolution) -> Result<Optimum> {
    grid.check()?;
    if !(rho.matrix().trace().re > MIN_OUTCOME_PROBABILITY) {
        return Err(Error::DegenerateInput);
    }
    let objective = ConditionalEntropy::new(rho, measured);
    let f = |theta: f64, phi: f64| objective.evaluate(bloch(theta, phi));

    let (dt, dp) = (grid.theta_step(), grid.phi_step());
    let rows: Vec<(f64, usize)> = (0..grid.theta)
        .into_par_iter()
        .map(|i| {
            let theta = i as f64 * dt;
            let mut best = (f64::INFINITY, 0);
            for j in 0..grid.phi {
                let v = f(theta, j as f64 * dp);
                if v < best.0 {
                    best = (v, j);
                }
            }
            best
        })
        .collect();

    let mut best = (f64::INFINITY, 0, 0);
    for (i, &(v, j)) in rows.iter().enumerate() {
        if v < best.0 {
            best = (v, i, j);
        }
    }
    if !best.0.is_finite() {
        return Err(Error::DegenerateInput);
    }
    let start = [best.1 as f64 * dt, best.2 as f64 * dp];
    let (x, v) = nelder_mead(|x| f(x[0], x[1]), start, [dt, dp]);

    let (theta, phi, value) = if v < best.0 {
        (x[0], x[1], v)
    } else {
        (start[0], start[1], best.0)
    };
    Ok(Optimum {
        value,
        direction: MeasurementDirection::from_angles(theta, phi),
    })
}

/// Conditional entropy for one fixed measurement.
pub fn conditional_entropy(rho: &DensityMatrix, measured: Subsystem, direction: &MeasurementDirection) -> f64 {
    ConditionalEntropy::new(rho, measured).evaluate(direction.bloch_vector())
}

/// Plain Nelder–Mead on the plane: reflection 1, expansion 2, contraction ½,
/// shrink ½.
fn nelder_mead(f: impl Fn([f64; 2]) -> f64, start: [f64; 2], step: [f64; 2]) -> ([f64; 2], f64) {
    let mut simplex = [start, [start[0] + step[0], start[1]], [start[0], start[1] + step[1]]];
    let mut values = simplex.map(&f);

    for _ in 0..SIMPLEX_MAX_ITER {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        simplex = order.map(|k| simplex[k]);
        values = order.map(|k| values[k]);
        if values[2] - values[0] < SIMPLEX_FTOL {
            break;
        }

        let centroid = [
            0.5 * (simplex[0][0] + simplex[1][0]),
            0.5 * (simplex[0][1] + simplex[1][1]),
        ];
        let along = |t: f64| {
            [
                centroid[0] + t * (simplex[2][0] - centroid[0]),
                centroid[1] + t * (simplex[2][1] - centroid[1]),
            ]
        };

        let reflected = along(-1.0);
        let fr = f(reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(expanded);
            if fe < fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
            continue;
        }
        if fr < values[1] {
            simplex[2] = reflected;
            values[2] = fr;
            continue;
        }
        let (contracted, fc) = if fr < values[2] {
            let x = along(-0.5);
            (x, f(x))
        } else {
            let x = along(0.5);
            (x, f(x))
        };
        if fc < values[2].min(fr) {
            simplex[2] = contracted;
            values[2] = fc;
            continue;
        }
        for k in 1..3 {
            simplex[k] = [
                simplex[0][0] + 0.5 * (simplex[k][0] - simplex[0][0]),
                simplex[0][1] + 0.5 * (simplex[k][1] - simplex[0][1]),
            ];
            values[k] = f(simplex[k]);
        }
    }

    let best = (0..3).min_by(|&i, &j| values[i].total_cmp(&values[j])).unwrap_or(0);
    (simplex[best], values[best])
}
