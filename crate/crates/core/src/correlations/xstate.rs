use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quantum_core::{DensityMatrix, Matrix4};
use crate::{Error, Result};

/// Slack on the population bounds; anything tighter rejects round-off from
/// the analytic solution at late times.
const COEFF_TOL: f64 = 1e-12;
/// Zero-pattern tolerance for recognising the symmetric family in a matrix.
pub const PATTERN_TOL: f64 = 1e-12;

/// The dynamic family
///
/// ```text
/// [ a 0 0 0 ]
/// [ 0 b c 0 ]
/// [ 0 c b 0 ]
/// [ 0 0 0 d ]      d = 1 − a − 2b
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetricXState {
    a: f64,
    b: f64,
    c: f64,
}

impl SymmetricXState {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if ![a, b, c].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidXState(format!(
                "non-finite coefficient in ({a}, {b}, {c})"
            )));
        }
        let d = 1.0 - a - 2.0 * b;
        for (name, x) in [("a", a), ("b", b), ("d", d)] {
            if !(-COEFF_TOL..=1.0 + COEFF_TOL).contains(&x) {
                return Err(Error::InvalidXState(format!("{name} = {x} outside [0, 1]")));
            }
        }
        if c.abs() > b + COEFF_TOL {
            return Err(Error::InvalidXState(format!("|c| = {} exceeds b = {b}", c.abs())));
        }
        Ok(SymmetricXState { a, b, c })
    }

    /// `|ee>` population.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Shared `|eg>`, `|ge>` population.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Real coherence between `|eg>` and `|ge>`.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// `|gg>` population.
    pub fn d(&self) -> f64 {
        1.0 - self.a - 2.0 * self.b
    }

    /// Excited-state population of either qubit, `a + b`.
    pub fn excited_population(&self) -> f64 {
        self.a + self.b
    }

    pub fn matrix(&self) -> Matrix4 {
        let mut m = Matrix4::from_real_diagonal([self.a, self.b, self.b, self.d()]);
        m[(1, 2)] = Complex64::new(self.c, 0.0);
        m[(2, 1)] = Complex64::new(self.c, 0.0);
        m
    }

    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.matrix())
    }

    /// Recognises the family inside a general matrix: equal middle
    /// populations, a real middle coherence and zeros elsewhere, all within
    /// `PATTERN_TOL`.
    pub fn from_density_matrix(rho: &DensityMatrix) -> Option<Self> {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let allowed = i == j || (i, j) == (1, 2) || (i, j) == (2, 1);
                if !allowed && m[(i, j)].norm() > PATTERN_TOL {
                    return None;
                }
            }
        }
        let (b1, b2) = (m[(1, 1)].re, m[(2, 2)].re);
        let z = m[(1, 2)];
        if (b1 - b2).abs() > PATTERN_TOL || z.im.abs() > PATTERN_TOL {
            return None;
        }
        Self::new(m[(0, 0)].re, 0.5 * (b1 + b2), z.re).ok()
    }
}

/// General X state
///
/// ```text
/// [ a   0   0   w ]
/// [ 0   b1  z   0 ]
/// [ 0   z*  b2  0 ]
/// [ w*  0   0   d ]
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralXState {
    populations: [f64; 4],
    z: Complex64,
    w: Complex64,
}

impl GeneralXState {
    /// `populations` are `(a, b1, b2, d)`.
    pub fn new(populations: [f64; 4], z: Complex64, w: Complex64) -> Result<Self> {
        let [a, b1, b2, d] = populations;
        if populations.iter().any(|&p| !(p >= -COEFF_TOL)) || !z.is_finite() || !w.is_finite() {
            return Err(Error::InvalidXState(format!("invalid populations {populations:?}")));
        }
        let trace: f64 = populations.iter().sum();
        if (trace - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidXState(format!("populations sum to {trace}")));
        }
        if z.norm() > (b1.max(0.0) * b2.max(0.0)).sqrt() + COEFF_TOL {
            return Err(Error::InvalidXState(format!("|z| = {} exceeds sqrt(b1 b2)", z.norm())));
        }
        if w.norm() > (a.max(0.0) * d.max(0.0)).sqrt() + COEFF_TOL {
            return Err(Error::InvalidXState(format!("|w| = {} exceeds sqrt(a d)", w.norm())));
        }
        Ok(GeneralXState { populations, z, w })
    }

    pub fn populations(&self) -> [f64; 4] {
        self.populations
    }

    pub fn inner_coherence(&self) -> Complex64 {
        self.z
    }

    pub fn outer_coherence(&self) -> Complex64 {
        self.w
    }

    pub fn matrix(&self) -> Matrix4 {
        let mut m = Matrix4::from_real_diagonal(self.populations);
        m[(1, 2)] = self.z;
        m[(2, 1)] = self.z.conj();
        m[(0, 3)] = self.w;
        m[(3, 0)] = self.w.conj();
        m
    }

    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.matrix())
    }

    /// The symmetric-middle member of the family, if this is one.
    pub fn as_symmetric(&self) -> Option<SymmetricXState> {
        let [a, b1, b2, _] = self.populations;
        if (b1 - b2).abs() > PATTERN_TOL || self.z.im.abs() > PATTERN_TOL || self.w.norm() > PATTERN_TOL {
            return None;
        }
        SymmetricXState::new(a, 0.5 * (b1 + b2), self.z.re).ok()
    }
}

impl From<SymmetricXState> for GeneralXState {
    fn from(s: SymmetricXState) -> Self {
        GeneralXState {
            populations: [s.a, s.b, s.b, s.d()],
            z: Complex64::new(s.c, 0.0),
            w: Complex64::new(0.0, 0.0),
        }
    }
}
