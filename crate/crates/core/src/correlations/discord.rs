use std::fmt;

use serde::{Deserialize, Serialize};

use super::measurement::{minimize_conditional_entropy, GridResolution, Optimum};
use super::xstate::SymmetricXState;
use crate::quantum_core::{shannon, xlog2x, DensityMatrix, Subsystem};
use crate::Result;

/// Which closed-form discord expression attains the minimum for an X state:
/// `D1` corresponds to a `σz` measurement, `D2` to `σx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiscordBranch {
    D1,
    D2,
}

impl fmt::Display for DiscordBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiscordBranch::D1 => "D1",
            DiscordBranch::D2 => "D2",
        })
    }
}

/// Branches closer than this are reported as `D1`.
const BRANCH_TIE: f64 = 1e-12;

/// Quantum discord with the measurement on `measured`:
/// `I(ρ) − [S(ρ_other) − min Σ_j p_j S(ρ_other | Π_j)]`.
pub fn discord_min(rho: &DensityMatrix, measured: Subsystem, grid: GridResolution) -> Result<Optimum> {
    let opt = minimize_conditional_entropy(rho, measured, grid)?;
    let other = rho.partial_trace(measured.other()).entropy()?;
    Ok(Optimum {
        value: rho.mutual_information()? - other + opt.value,
        direction: opt.direction,
    })
}

/// Classical correlation `max [S(ρ_other) − Σ_j p_j S(ρ_other | Π_j)]` over
/// projective measurements on `measured`.
pub fn classical_correlation(rho: &DensityMatrix, measured: Subsystem, grid: GridResolution) -> Result<Optimum> {
    let opt = minimize_conditional_entropy(rho, measured, grid)?;
    let other = rho.partial_trace(measured.other()).entropy()?;
    Ok(Optimum {
        value: other - opt.value,
        direction: opt.direction,
    })
}

/// Entropies of the symmetric X family in closed form.
#[derive(Debug, Clone, Copy)]
struct XEntropies {
    /// `S(ρ_A) = S(ρ_B)`
    marginal: f64,
    /// `S(ρ_AB)`
    joint: f64,
}

fn x_entropies(s: &SymmetricXState) -> XEntropies {
    let (a, b, c, d) = (s.a(), s.b(), s.c(), s.d());
    XEntropies {
        marginal: shannon(&[a + b, b + d]),
        joint: shannon(&[a, d, b + c, b - c]),
    }
}

/// `x log₂(x / total)`, zero when `x` vanishes.
fn relative_term(x: f64, total: f64) -> f64 {
    if x > 0.0 {
        x * (x / total).log2()
    } else {
        0.0
    }
}

/// `σz`-measurement discord of the symmetric X family.
pub fn discord_d1(s: &SymmetricXState) -> f64 {
    let (a, b, d) = (s.a(), s.b(), s.d());
    let e = x_entropies(s);
    e.marginal
        - e.joint
        - relative_term(a, a + b)
        - relative_term(b, a + b)
        - relative_term(d, b + d)
        - relative_term(b, b + d)
}

/// `α = √((a − d)² + 4|z + ω|²)` with `z = c`, `ω = 0`.
fn alpha(s: &SymmetricXState) -> f64 {
    ((s.a() - s.d()).powi(2) + 4.0 * s.c() * s.c()).sqrt().min(1.0)
}

fn binary_alpha_entropy(alpha: f64) -> f64 {
    shannon(&[0.5 * (1.0 + alpha), 0.5 * (1.0 - alpha)])
}

/// `σx`-measurement discord of the symmetric X family.
pub fn discord_d2(s: &SymmetricXState) -> f64 {
    let e = x_entropies(s);
    e.marginal - e.joint + binary_alpha_entropy(alpha(s))
}

/// Closed-form discord `min{D1, D2}` and the branch attaining it.
pub fn discord_x_symmetric(s: &SymmetricXState) -> (f64, DiscordBranch) {
    let d1 = discord_d1(s);
    let d2 = discord_d2(s);
    if d2 < d1 - BRANCH_TIE {
        (d2, DiscordBranch::D2)
    } else {
        (d1, DiscordBranch::D1)
    }
}

/// `I = 2 S(ρ_A) − S(ρ_AB)` for the symmetric family.
pub fn mutual_information_x_symmetric(s: &SymmetricXState) -> f64 {
    let e = x_entropies(s);
    2.0 * e.marginal - e.joint
}

/// Classical correlation paired with a discord branch (`CC1` or `CC2`).
///
/// `CC2` is written as `S(ρ_A) − h(½(1 ± α))`, with
/// `α = √([2(a + b) − 1]² + 4c²)`, which is `I − D2` exactly.
pub fn classical_correlation_x_symmetric(s: &SymmetricXState, branch: DiscordBranch) -> f64 {
    let (a, b, c, d) = (s.a(), s.b(), s.c(), s.d());
    let excited = a + b;
    match branch {
        DiscordBranch::D1 => {
            -2.0 * xlog2x(excited) - 2.0 * xlog2x(1.0 - excited) + xlog2x(d) + xlog2x(a) + 2.0 * xlog2x(b)
        }
        DiscordBranch::D2 => {
            let alpha = ((2.0 * excited - 1.0).powi(2) + 4.0 * c * c).sqrt().min(1.0);
            shannon(&[excited, 1.0 - excited]) - binary_alpha_entropy(alpha)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum_core::{Matrix2, ProjectorPair};

    fn ket(bits: [f64; 2]) -> Matrix2 {
        let v = bits.map(|x| num_complex::Complex64::new(x, 0.0));
        Matrix2::outer(&v)
    }

    /// ½(|0><0|⊗|+><+| + |1><1|⊗|−><−|)
    fn rho1() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let m = (ket([1.0, 0.0]).kron(&ket([h, h])) + ket([0.0, 1.0]).kron(&ket([h, -h]))).scale(0.5);
        DensityMatrix::new(m).unwrap()
    }

    /// ½(|0><0|⊗|+><+| + |1><1|⊗|0><0|)
    fn rho2() -> DensityMatrix {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let m = (ket([1.0, 0.0]).kron(&ket([h, h])) + ket([0.0, 1.0]).kron(&ket([1.0, 0.0]))).scale(0.5);
        DensityMatrix::new(m).unwrap()
    }

    #[test]
    fn rho1_has_no_discord_on_either_side() {
        let g = GridResolution::default();
        for side in [Subsystem::A, Subsystem::B] {
            let d = discord_min(&rho1(), side, g).unwrap();
            assert!(d.value.abs() < 1e-6, "{side}: {}", d.value);
        }
        assert!((rho1().mutual_information().unwrap() - 1.0).abs() < 1e-12);
        let c = classical_correlation(&rho1(), Subsystem::A, g).unwrap();
        assert!((c.value - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rho2_discord_is_asymmetric() {
        let g = GridResolution::default();
        let a = discord_min(&rho2(), Subsystem::A, g).unwrap();
        let b = discord_min(&rho2(), Subsystem::B, g).unwrap();
        assert!(a.value.abs() < 1e-6);
        assert!(b.value > 0.05, "{}", b.value);
        // the optimal A-side measurement is the computational basis
        assert!(a.direction.theta() < 1e-3 || a.direction.theta() > std::f64::consts::PI - 1e-3);
        let undisturbed =
            crate::quantum_core::apply_local_projectors(&rho2(), Some(&ProjectorPair::computational()), None);
        assert!(undisturbed.matrix().max_abs_diff(rho2().matrix()) < 1e-15);
    }

    #[test]
    fn singlet_splits_evenly() {
        let g = GridResolution::default();
        let s = DensityMatrix::singlet();
        for side in [Subsystem::A, Subsystem::B] {
            assert!((discord_min(&s, side, g).unwrap().value - 1.0).abs() < 1e-6);
            assert!((classical_correlation(&s, side, g).unwrap().value - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn closed_form_zero_cases() {
        let ee = SymmetricXState::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(discord_x_symmetric(&ee), (0.0, DiscordBranch::D1));
        assert_eq!(classical_correlation_x_symmetric(&ee, DiscordBranch::D1), 0.0);
        assert!(classical_correlation_x_symmetric(&ee, DiscordBranch::D2).abs() < 1e-15);
        // product of two identically decayed qubits
        let p: f64 = 0.3;
        let prod = SymmetricXState::new(p * p, p * (1.0 - p), 0.0).unwrap();
        assert!(discord_x_symmetric(&prod).0.abs() < 1e-12);
        assert!(mutual_information_x_symmetric(&prod).abs() < 1e-12);
    }

    #[test]
    fn singlet_closed_form() {
        let s = SymmetricXState::new(0.0, 0.5, -0.5).unwrap();
        let (d, _) = discord_x_symmetric(&s);
        assert!((d - 1.0).abs() < 1e-12);
        assert!((mutual_information_x_symmetric(&s) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn closed_forms_decompose_mutual_information() {
        let s = SymmetricXState::new(0.15, 0.3, -0.12).unwrap();
        let i = mutual_information_x_symmetric(&s);
        for (branch, d) in [(DiscordBranch::D1, discord_d1(&s)), (DiscordBranch::D2, discord_d2(&s))] {
            let cc = classical_correlation_x_symmetric(&s, branch);
            assert!((i - d - cc).abs() < 1e-12, "{branch}");
        }
        let rho = s.to_density_matrix().unwrap();
        assert!((rho.mutual_information().unwrap() - i).abs() < 1e-12);
    }
}
