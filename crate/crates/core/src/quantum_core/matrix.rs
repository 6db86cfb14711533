use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense `N x N` complex matrix stored row-major on the stack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CMatrix<const N: usize>(#[serde(with = "serde_rows")] pub [[Complex64; N]; N]);

pub type Matrix2 = CMatrix<2>;
pub type Matrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    pub fn zeros() -> Self {
        CMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_real_diagonal(diag: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, d) in diag.into_iter().enumerate() {
            m.0[i][i] = Complex64::new(d, 0.0);
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    /// Projector `|v><v|`.
    pub fn outer(v: &[Complex64; N]) -> Self {
        Self::from_fn(|i, j| v[i] * v[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn diagonal_real(&self) -> [f64; N] {
        let mut d = [0.0; N];
        for (i, x) in d.iter_mut().enumerate() {
            *x = self.0[i][i].re;
        }
        d
    }

    /// Largest `|m_ij - conj(m_ji)|`.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in i..N {
                worst = worst.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        worst
    }

    /// `(M + M^dagger) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(|i, j| (self.0[i][j] + self.0[j][i].conj()) * 0.5)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of the strictly off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..N {
            for j in 0..N {
                if i != j {
                    s += self.0[i][j].norm_sqr();
                }
            }
        }
        s.sqrt()
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Anticommutator `{self, other}`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }
}

impl Matrix2 {
    /// Kronecker product `self ⊗ other`, first factor is qubit A.
    pub fn kron(&self, other: &Matrix2) -> Matrix4 {
        Matrix4::from_fn(|r, c| self.0[r / 2][c / 2] * other.0[r % 2][c % 2])
    }

    pub fn pauli_x() -> Self {
        CMatrix([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn pauli_y() -> Self {
        let i = Complex64::new(0.0, 1.0);
        CMatrix([[ZERO, -i], [i, ZERO]])
    }

    pub fn pauli_z() -> Self {
        CMatrix([[ONE, ZERO], [ZERO, -ONE]])
    }
}

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

/// Serializes entries as `[re, im]` pairs, row-major.
mod serde_rows {
    use num_complex::Complex64;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(rows: &[[Complex64; N]; N], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<[f64; 2]>> = rows.iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(d: D) -> Result<[[Complex64; N]; N], D::Error> {
        let v: Vec<Vec<[f64; 2]>> = Vec::deserialize(d)?;
        if v.len() != N || v.iter().any(|r| r.len() != N) {
            return Err(D::Error::custom(format!("expected a {N}x{N} matrix")));
        }
        let mut out = [[Complex64::new(0.0, 0.0); N]; N];
        for (i, row) in v.iter().enumerate() {
            for (j, [re, im]) in row.iter().enumerate() {
                out[i][j] = Complex64::new(*re, *im);
            }
        }
        Ok(out)
    }
}
