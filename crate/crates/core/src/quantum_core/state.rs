use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::eigen::{hermitian_eigensystem, hermitian_eigenvalues};
use super::matrix::{CMatrix, Matrix2, Matrix4};
use crate::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues in `[-POSITIVITY_TOL, 0)` are clamped to zero.
pub const POSITIVITY_TOL: f64 = 1e-10;

/// Basis labels in storage order.
pub const BASIS: [&str; 4] = ["ee", "eg", "ge", "gg"];

/// One of the two qubits. `A` is the first tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

impl Subsystem {
    pub fn other(self) -> Self {
        match self {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
        })
    }
}

impl FromStr for Subsystem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(Subsystem::A),
            "B" | "b" => Ok(Subsystem::B),
            other => Err(format!("unknown subsystem {other:?}, expected A or B")),
        }
    }
}

/// Two-qubit density matrix. Construction validates Hermiticity, unit trace
/// and positivity, so every value of this type is a physical state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityMatrix(Matrix4);

impl DensityMatrix {
    /// Validates `m`. Eigenvalues within the clamping window are set to zero
    /// and the result is renormalized to unit trace.
    pub fn new(m: Matrix4) -> Result<Self> {
        validate(&m).map(DensityMatrix)
    }

    /// Skips validation. For matrices that are physical by construction.
    pub(crate) fn new_unchecked(m: Matrix4) -> Self {
        DensityMatrix(m)
    }

    pub fn from_real_diagonal(diag: [f64; 4]) -> Result<Self> {
        Self::new(Matrix4::from_real_diagonal(diag))
    }

    /// `|ψ><ψ|` for a (not necessarily normalized) state vector.
    pub fn pure(psi: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let unit = psi.map(|z| z / norm);
        Self::new(Matrix4::outer(&unit))
    }

    /// `σ ⊗ τ`.
    pub fn product(a: &ReducedState, b: &ReducedState) -> Result<Self> {
        Self::new(a.matrix().kron(b.matrix()))
    }

    /// Product basis state, e.g. `basis_state("eg")`.
    pub fn basis_state(label: &str) -> Option<Self> {
        let k = BASIS.iter().position(|b| *b == label)?;
        let mut d = [0.0; 4];
        d[k] = 1.0;
        Some(DensityMatrix(Matrix4::from_real_diagonal(d)))
    }

    /// `(|eg> - |ge>)/√2`.
    pub fn singlet() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [0.0, h, -h, 0.0].map(|x| Complex64::new(x, 0.0));
        DensityMatrix(Matrix4::outer(&psi))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix(Matrix4::identity().scale(0.25))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0 .0[i][j]
    }

    pub fn eigenvalues(&self) -> Result<[f64; 4]> {
        hermitian_eigenvalues(&self.0)
    }

    /// Von Neumann entropy in bits.
    pub fn entropy(&self) -> Result<f64> {
        Ok(entropy_of_spectrum(&self.eigenvalues()?))
    }

    /// Reduced state of `keep`, tracing out the other qubit.
    pub fn partial_trace(&self, keep: Subsystem) -> ReducedState {
        ReducedState {
            matrix: partial_trace_matrix(&self.0, keep),
            subsystem: keep,
        }
    }

    /// `S(ρ_A) + S(ρ_B) − S(ρ_AB)` in bits.
    pub fn mutual_information(&self) -> Result<f64> {
        let sa = self.partial_trace(Subsystem::A).entropy()?;
        let sb = self.partial_trace(Subsystem::B).entropy()?;
        Ok(sa + sb - self.entropy()?)
    }
}

impl AsRef<Matrix4> for DensityMatrix {
    fn as_ref(&self) -> &Matrix4 {
        &self.0
    }
}

/// Single-qubit state obtained from a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReducedState {
    matrix: Matrix2,
    subsystem: Subsystem,
}

impl ReducedState {
    pub fn new(m: Matrix2, subsystem: Subsystem) -> Result<Self> {
        validate(&m).map(|matrix| ReducedState { matrix, subsystem })
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn subsystem(&self) -> Subsystem {
        self.subsystem
    }

    pub fn eigenvalues(&self) -> Result<[f64; 2]> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn entropy(&self) -> Result<f64> {
        Ok(entropy_of_spectrum(&self.eigenvalues()?))
    }
}

/// Checks the density-matrix invariants for any dimension and returns the
/// clamped, renormalized matrix.
pub fn validate<const N: usize>(m: &CMatrix<N>) -> Result<CMatrix<N>> {
    let deviation = m.hermiticity_deviation();
    if !(deviation <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = m.trace();
    if !((trace.re - 1.0).abs() <= TRACE_TOL && trace.im.abs() <= TRACE_TOL) {
        return Err(Error::TraceNotOne { trace: trace.re });
    }
    let h = m.hermitian_part();
    let es = hermitian_eigensystem(&h)?;
    let smallest = es.values[N - 1];
    if smallest < -POSITIVITY_TOL {
        return Err(Error::NotPositive { eigenvalue: smallest });
    }
    if smallest >= 0.0 {
        return Ok(h);
    }
    let total: f64 = es.values.iter().map(|&x| x.max(0.0)).sum();
    Ok(es.reconstruct_with(|x| x.max(0.0) / total))
}

/// `−Σ λ log₂ λ` with `0 log 0 = 0`. Negative round-off is treated as zero.
pub fn entropy_of_spectrum(values: &[f64]) -> f64 {
    -values.iter().map(|&x| xlog2x(x)).sum::<f64>()
}

/// `x log₂ x`, zero for `x <= 0`.
pub fn xlog2x(x: f64) -> f64 {
    if x > 0.0 {
        x * x.log2()
    } else {
        0.0
    }
}

/// Binary entropy-style sum `−Σ p log₂ p` over a slice of probabilities.
pub fn shannon(ps: &[f64]) -> f64 {
    entropy_of_spectrum(ps)
}

pub(crate) fn partial_trace_matrix(m: &Matrix4, keep: Subsystem) -> Matrix2 {
    // row index r = 2 * a + b
    Matrix2::from_fn(|i, k| match keep {
        Subsystem::A => m.0[2 * i][2 * k] + m.0[2 * i + 1][2 * k + 1],
        Subsystem::B => m.0[i][k] + m.0[2 + i][2 + k],
    })
}
