use serde::{Deserialize, Serialize};

use super::xstate::SymmetricXState;
use crate::quantum_core::{hermitian_eigensystem, hermitian_eigenvalues, DensityMatrix, Matrix2};
use crate::Result;

/// Concurrence of a two-qubit state.
///
/// The eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)` coincide with those of the
/// Hermitian matrix `√ρ ρ̃ √ρ`, which is what gets diagonalized here.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let m = rho.matrix();
    let sqrt_rho = hermitian_eigensystem(m)?.reconstruct_with(|x| x.max(0.0).sqrt());
    let yy = Matrix2::pauli_y().kron(&Matrix2::pauli_y());
    let flipped = yy * m.conj() * yy;
    let product = sqrt_rho * flipped * sqrt_rho;
    let lambdas = hermitian_eigenvalues(&product)?;
    let roots = lambdas.map(|x| x.max(0.0).sqrt());
    let big = roots[0] - roots[1] - roots[2] - roots[3];
    Ok(big.max(0.0))
}

/// Which of the spin-flip roots `{√(ad), √(ad), |b−c|, |b+c|}` is largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConcurrenceCase {
    /// `√(ad)` largest: `Λ = −2b`.
    Populations,
    /// `|b+c|` largest: `Λ = 2(c − √(ad))`.
    SymmetricCoherence,
    /// `|b−c|` largest: `Λ = −2(c + √(ad))`.
    AntisymmetricCoherence,
}

/// Signed `Λ` before clamping, with the case that produced it.
pub fn concurrence_lambda_x_symmetric(s: &SymmetricXState) -> (f64, ConcurrenceCase) {
    let r = (s.a() * s.d()).max(0.0).sqrt();
    let minus = (s.b() - s.c()).abs();
    let plus = (s.b() + s.c()).abs();
    if r >= minus && r >= plus {
        (-(minus + plus), ConcurrenceCase::Populations)
    } else if plus >= minus {
        (plus - minus - 2.0 * r, ConcurrenceCase::SymmetricCoherence)
    } else {
        (minus - plus - 2.0 * r, ConcurrenceCase::AntisymmetricCoherence)
    }
}

/// Closed-form concurrence of the symmetric X family.
pub fn concurrence_x_symmetric(s: &SymmetricXState) -> f64 {
    concurrence_lambda_x_symmetric(s).0.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum_core::Matrix4;
    use num_complex::Complex64;

    #[test]
    fn singlet_is_maximally_entangled() {
        assert!((concurrence(&DensityMatrix::singlet()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_states_are_separable() {
        for label in ["ee", "eg", "ge", "gg"] {
            let rho = DensityMatrix::basis_state(label).unwrap();
            assert!(concurrence(&rho).unwrap().abs() < 1e-12);
        }
        assert!(concurrence(&DensityMatrix::maximally_mixed()).unwrap().abs() < 1e-12);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus_plus = [0.5, 0.5, 0.5, 0.5].map(|x| Complex64::new(x, 0.0));
        assert!(concurrence(&DensityMatrix::pure(plus_plus).unwrap()).unwrap() < 1e-7);
        let e_plus = [h, h, 0.0, 0.0].map(|x| Complex64::new(x, 0.0));
        assert!(concurrence(&DensityMatrix::pure(e_plus).unwrap()).unwrap() < 1e-7);
    }

    #[test]
    fn werner_state() {
        // ρ̃ = ρ for this mixture, so the roots are the eigenvalues of ρ:
        // 13/16 and three times 1/16 → 13/16 − 3/16 = 0.625
        let m = DensityMatrix::singlet().matrix().scale(0.75) + Matrix4::identity().scale(0.0625);
        let rho = DensityMatrix::new(m).unwrap();
        assert!((concurrence(&rho).unwrap() - 0.625).abs() < 1e-12);
    }

    #[test]
    fn x_symmetric_examples() {
        let ee = SymmetricXState::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(concurrence_x_symmetric(&ee), 0.0);
        let singlet = SymmetricXState::new(0.0, 0.5, -0.5).unwrap();
        assert!((concurrence_x_symmetric(&singlet) - 1.0).abs() < 1e-15);
        assert_eq!(
            concurrence_lambda_x_symmetric(&singlet).1,
            ConcurrenceCase::AntisymmetricCoherence
        );
        let triplet = SymmetricXState::new(0.0, 0.5, 0.5).unwrap();
        assert_eq!(
            concurrence_lambda_x_symmetric(&triplet).1,
            ConcurrenceCase::SymmetricCoherence
        );
        let mixed = SymmetricXState::new(0.25, 0.25, 0.0).unwrap();
        assert_eq!(
            concurrence_lambda_x_symmetric(&mixed),
            (-0.5, ConcurrenceCase::Populations)
        );
    }
}
