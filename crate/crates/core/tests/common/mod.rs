//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use dipcorr::correlations::SymmetricXState;
use dipcorr::quantum_core::{DensityMatrix, Matrix4};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// `G G† / tr(G G†)` with `G` a complex Gaussian matrix of `rank` columns.
pub fn random_state_of_rank(rng: &mut ChaCha8Rng, rank: usize) -> DensityMatrix {
    let g: Vec<[Complex64; 4]> = (0..rank).map(|_| [(); 4].map(|_| gaussian(rng))).collect();
    let mut m = Matrix4::from_fn(|i, j| g.iter().map(|col| col[i] * col[j].conj()).sum());
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    DensityMatrix::new(m.hermitian_part()).expect("Ginibre state is valid")
}

pub fn random_state(rng: &mut ChaCha8Rng) -> DensityMatrix {
    random_state_of_rank(rng, 4)
}

pub fn random_pure(rng: &mut ChaCha8Rng) -> DensityMatrix {
    random_state_of_rank(rng, 1)
}

/// Uniform `(a, 2b, d)` on the simplex, then `c` uniform in `[−b, b]`.
pub fn random_x_state(rng: &mut ChaCha8Rng) -> SymmetricXState {
    let mut cuts = [rng.gen::<f64>(), rng.gen::<f64>()];
    cuts.sort_by(f64::total_cmp);
    let a = cuts[0];
    let b = 0.5 * (cuts[1] - cuts[0]);
    let c = b * rng.gen_range(-1.0..=1.0);
    SymmetricXState::new(a, b, c).expect("sampled inside the family")
}
