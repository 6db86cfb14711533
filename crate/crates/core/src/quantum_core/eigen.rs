//! Cyclic Jacobi diagonalization of small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `m_pq` with a diagonal
//! unitary and then applies the real symmetric Jacobi rotation, so the pair
//! acts on the `(p, q)` plane as
//!
//! ```text
//! U = [ c            s          ]
//!     [ -s e^{-iφ}   c e^{-iφ}  ]      m_pq = |m_pq| e^{iφ}
//! ```
//!
//! Sweeps run until the off-diagonal Frobenius norm drops below
//! `OFF_DIAGONAL_TOL` (scaled by the matrix norm when that exceeds one).

use num_complex::Complex64;

use super::matrix::CMatrix;
use crate::{Error, Result};

const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

/// Eigenvalues sorted descending with the matching orthonormal eigenvectors
/// stored as the columns of `vectors`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem<const N: usize> {
    pub values: [f64; N],
    pub vectors: CMatrix<N>,
}

impl<const N: usize> EigenSystem<N> {
    /// Column `k` as an array.
    pub fn vector(&self, k: usize) -> [Complex64; N] {
        let mut v = [Complex64::new(0.0, 0.0); N];
        for (i, x) in v.iter_mut().enumerate() {
            *x = self.vectors.0[i][k];
        }
        v
    }

    /// `V diag(f(λ)) V†`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix<N> {
        let v = &self.vectors;
        CMatrix::from_fn(|i, j| (0..N).map(|k| v.0[i][k] * v.0[j][k].conj() * f(self.values[k])).sum())
    }

    pub fn reconstruct(&self) -> CMatrix<N> {
        self.reconstruct_with(|x| x)
    }
}

/// Diagonalizes a Hermitian matrix. Only the Hermitian part of `m` is used;
/// callers are expected to have checked Hermiticity.
pub fn hermitian_eigensystem<const N: usize>(m: &CMatrix<N>) -> Result<EigenSystem<N>> {
    let mut a = m.hermitian_part();
    let mut v = CMatrix::<N>::identity();
    let tol = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    while a.off_diagonal_norm() >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: a.off_diagonal_norm(),
            });
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    let diag = a.diagonal_real();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let values = std::array::from_fn(|k| diag[order[k]]);
    let vectors = CMatrix::from_fn(|i, k| v.0[i][order[k]]);
    Ok(EigenSystem { values, vectors })
}

/// Eigenvalues only, sorted descending.
pub fn hermitian_eigenvalues<const N: usize>(m: &CMatrix<N>) -> Result<[f64; N]> {
    hermitian_eigensystem(m).map(|e| e.values)
}

fn rotate<const N: usize>(a: &mut CMatrix<N>, v: &mut CMatrix<N>, p: usize, q: usize) {
    let apq = a.0[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r; // e^{iφ}
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;

    let zeta = (aqq - app) / (2.0 * r);
    let t = if zeta.is_finite() {
        zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // U restricted to the (p, q) plane, columns p and q.
    let upp = Complex64::new(c, 0.0);
    let upq = Complex64::new(s, 0.0);
    let uqp = -phase.conj() * s;
    let uqq = phase.conj() * c;

    // A <- A U (columns p, q)
    for k in 0..N {
        let akp = a.0[k][p];
        let akq = a.0[k][q];
        a.0[k][p] = akp * upp + akq * uqp;
        a.0[k][q] = akp * upq + akq * uqq;
    }
    // A <- U† A (rows p, q)
    for k in 0..N {
        let apk = a.0[p][k];
        let aqk = a.0[q][k];
        a.0[p][k] = upp.conj() * apk + uqp.conj() * aqk;
        a.0[q][k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a.0[p][q] = Complex64::new(0.0, 0.0);
    a.0[q][p] = Complex64::new(0.0, 0.0);
    a.0[p][p].im = 0.0;
    a.0[q][q].im = 0.0;

    for k in 0..N {
        let vkp = v.0[k][p];
        let vkq = v.0[k][q];
        v.0[k][p] = vkp * upp + vkq * uqp;
        v.0[k][q] = vkp * upq + vkq * uqq;
    }
}
