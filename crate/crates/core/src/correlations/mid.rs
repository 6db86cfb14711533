use serde::{Deserialize, Serialize};

use super::xstate::SymmetricXState;
use crate::quantum_core::{
    apply_local_projectors, hermitian_eigensystem, xlog2x, DensityMatrix, ProjectorPair, ReducedState, Subsystem,
};
use crate::Result;

/// Reduced spectra closer than this are treated as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MidValue {
    pub value: f64,
    /// A reduced state was degenerate and its qubit was measured in the
    /// computational basis.
    pub degenerate: bool,
}

/// Measurement-induced disturbance `I(ρ) − I(Π(ρ))`, with `Π` built from the
/// eigenprojectors of both reduced states.
///
/// The eigenbasis of a degenerate reduced state is arbitrary; that qubit is
/// then measured in `{|e>, |g>}` and `degenerate` is set.
pub fn mid(rho: &DensityMatrix) -> Result<MidValue> {
    let (pa, da) = local_eigenbasis(&rho.partial_trace(Subsystem::A))?;
    let (pb, db) = local_eigenbasis(&rho.partial_trace(Subsystem::B))?;
    let measured = apply_local_projectors(rho, Some(&pa), Some(&pb));
    Ok(MidValue {
        value: rho.mutual_information()? - measured.mutual_information()?,
        degenerate: da || db,
    })
}

fn local_eigenbasis(r: &ReducedState) -> Result<(ProjectorPair, bool)> {
    let es = hermitian_eigensystem(r.matrix())?;
    if (es.values[0] - es.values[1]).abs() < DEGENERACY_TOL {
        return Ok((ProjectorPair::computational(), true));
    }
    Ok((ProjectorPair::from_vector(es.vector(0))?, false))
}

/// `−2b log₂ b + (b−c) log₂(b−c) + (b+c) log₂(b+c)`.
pub fn mid_x_symmetric(s: &SymmetricXState) -> f64 {
    let (b, c) = (s.b(), s.c());
    -2.0 * xlog2x(b) + xlog2x(b - c) + xlog2x(b + c)
}

/// Whether the reduced states of the symmetric family are degenerate,
/// i.e. `a + b = ½`.
pub fn mid_degenerate_x_symmetric(s: &SymmetricXState) -> bool {
    (2.0 * s.excited_population() - 1.0).abs() < DEGENERACY_TOL
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::discord_d1;
    use crate::quantum_core::Matrix4;
    use num_complex::Complex64;

    #[test]
    fn singlet_mid_is_marginal_entropy() {
        let s = DensityMatrix::singlet();
        let m = mid(&s).unwrap();
        let sa = s.partial_trace(Subsystem::A).entropy().unwrap();
        assert!((m.value - 1.0).abs() < 1e-12);
        assert!((m.value - sa).abs() < 1e-12);
        assert!(m.degenerate);
    }

    #[test]
    fn product_state_has_no_mid() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let psi = [h * 0.6, h * 0.8, h * 0.6, h * 0.8].map(|x| Complex64::new(x, 0.0));
        let rho = DensityMatrix::pure(psi).unwrap();
        let m = mid(&rho).unwrap();
        assert!(m.value.abs() < 1e-12);
        assert!(!m.degenerate);
    }

    #[test]
    fn closed_form_examples() {
        let s = SymmetricXState::new(0.3, 0.2, 0.0).unwrap();
        assert_eq!(mid_x_symmetric(&s), 0.0);
        let b = 0.2;
        let edge = SymmetricXState::new(0.3, b, b).unwrap();
        let expected = -2.0 * b * b.log2() + 2.0 * b * (2.0 * b).log2();
        assert!((mid_x_symmetric(&edge) - expected).abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_general_path_and_d1() {
        for (a, b, c) in [(0.2, 0.3, -0.1), (0.05, 0.4, 0.35), (0.6, 0.1, -0.1)] {
            let s = SymmetricXState::new(a, b, c).unwrap();
            let general = mid(&s.to_density_matrix().unwrap()).unwrap();
            assert!((general.value - mid_x_symmetric(&s)).abs() < 1e-10);
            assert!((discord_d1(&s) - mid_x_symmetric(&s)).abs() < 1e-10);
        }
    }

    #[test]
    fn degenerate_point_uses_computational_basis() {
        // a + b = ½
        let s = SymmetricXState::new(0.2, 0.3, -0.15).unwrap();
        assert!(mid_degenerate_x_symmetric(&s));
        let m = mid(&s.to_density_matrix().unwrap()).unwrap();
        assert!(m.degenerate);
        assert!((m.value - mid_x_symmetric(&s)).abs() < 1e-10);

        // off the family the flag still fires, with the same basis rule
        let mut x = Matrix4::from_real_diagonal([0.25; 4]);
        x[(0, 3)] = Complex64::new(0.2, 0.0);
        x[(3, 0)] = Complex64::new(0.2, 0.0);
        assert!(mid(&DensityMatrix::new(x).unwrap()).unwrap().degenerate);
    }
}
