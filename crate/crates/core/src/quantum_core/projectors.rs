use num_complex::Complex64;

use super::matrix::{Matrix2, Matrix4};
use super::state::DensityMatrix;
use crate::{Error, Result};

const PROJECTOR_TOL: f64 = 1e-12;

/// A complete pair of orthogonal rank-one projectors on one qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectorPair([Matrix2; 2]);

impl ProjectorPair {
    /// Checks `P0 + P1 = I`, `P_i² = P_i`, `P_i† = P_i` and `P0 P1 = 0`.
    pub fn new(p0: Matrix2, p1: Matrix2) -> Result<Self> {
        let id = Matrix2::identity();
        let deviation = [
            (p0 + p1).max_abs_diff(&id),
            (p0 * p0).max_abs_diff(&p0),
            (p1 * p1).max_abs_diff(&p1),
            (p0 * p1).max_abs(),
            p0.hermiticity_deviation(),
            p1.hermiticity_deviation(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if !(deviation <= PROJECTOR_TOL) {
            return Err(Error::IncompleteProjectorSet { deviation });
        }
        Ok(ProjectorPair([p0, p1]))
    }

    /// `{|v><v|, I − |v><v|}` for a unit vector `v`.
    pub fn from_vector(v: [Complex64; 2]) -> Result<Self> {
        let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        let v = v.map(|z| z / norm);
        let p0 = Matrix2::outer(&v);
        Self::new(p0, Matrix2::identity() - p0)
    }

    /// `½(I ± n·σ)` for a unit Bloch vector. `n` is normalized here, so the
    /// pair is complete by construction.
    pub fn from_bloch(n: [f64; 3]) -> Self {
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        let (x, y, z) = (n[0] / len, n[1] / len, n[2] / len);
        let p = |s: f64| {
            Matrix2::from_fn(|i, j| {
                0.5 * match (i, j) {
                    (0, 0) => Complex64::new(1.0 + s * z, 0.0),
                    (1, 1) => Complex64::new(1.0 - s * z, 0.0),
                    (0, 1) => Complex64::new(s * x, -s * y),
                    _ => Complex64::new(s * x, s * y),
                }
            })
        };
        ProjectorPair([p(1.0), p(-1.0)])
    }

    /// Projectors on `|e>` and `|g>`.
    pub fn computational() -> Self {
        ProjectorPair([
            Matrix2::from_real_diagonal([1.0, 0.0]),
            Matrix2::from_real_diagonal([0.0, 1.0]),
        ])
    }

    pub fn projectors(&self) -> &[Matrix2; 2] {
        &self.0
    }
}

/// `Σ_ij (Π_i ⊗ Π_j) ρ (Π_i ⊗ Π_j)`. `None` leaves that qubit untouched.
pub fn apply_local_projectors(
    rho: &DensityMatrix,
    on_a: Option<&ProjectorPair>,
    on_b: Option<&ProjectorPair>,
) -> DensityMatrix {
    let identity = [Matrix2::identity()];
    let side = |p: Option<&ProjectorPair>| -> Vec<Matrix2> {
        match p {
            Some(pair) => pair.0.to_vec(),
            None => identity.to_vec(),
        }
    };
    let m = rho.matrix();
    let mut out = Matrix4::zeros();
    for pa in side(on_a) {
        for pb in side(on_b) {
            let k = pa.kron(&pb);
            out = out + k * *m * k;
        }
    }
    // A complete projective channel maps states to states.
    DensityMatrix::new_unchecked(out.hermitian_part())
}
