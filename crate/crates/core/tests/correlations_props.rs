mod common;

use common::{random_pure, random_state, random_x_state, rng};
use dipcorr::correlations::{
    classical_correlation, concurrence, concurrence_x_symmetric, discord_d1, discord_min, discord_x_symmetric, mid,
    mid_x_symmetric, GridResolution,
};
use dipcorr::quantum_core::{DensityMatrix, Matrix4, Subsystem};
use proptest::prelude::*;

fn rho2() -> DensityMatrix {
    let mut m = Matrix4::zeros();
    // ½(|0><0| ⊗ |0><0| + |1><1| ⊗ |+><+|)
    m[(0, 0)] = 0.5.into();
    for (i, j) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        m[(i, j)] = 0.25.into();
    }
    DensityMatrix::new(m).unwrap()
}

#[test]
fn mid_closed_form_is_d1() {
    let mut r = rng(1);
    for _ in 0..500 {
        let s = random_x_state(&mut r);
        assert!((mid_x_symmetric(&s) - discord_d1(&s)).abs() < 1e-10, "{s:?}");
    }
}

#[test]
fn concurrence_closed_form_matches_general_route() {
    let mut r = rng(2);
    for _ in 0..500 {
        let s = random_x_state(&mut r);
        let general = concurrence(&s.to_density_matrix().unwrap()).unwrap();
        assert!((concurrence_x_symmetric(&s) - general).abs() < 1e-10, "{s:?}");
    }
}

#[test]
fn mid_bounds_discord_on_random_states() {
    let mut r = rng(3);
    for k in 0..60 {
        let rho = if k % 3 == 0 {
            random_pure(&mut r)
        } else {
            random_state(&mut r)
        };
        let m = mid(&rho).unwrap().value;
        for side in [Subsystem::A, Subsystem::B] {
            let d = discord_min(&rho, side, GridResolution::default()).unwrap().value;
            assert!(m >= d - 1e-8, "mid {m} < discord {d}");
        }
    }
    for _ in 0..500 {
        let s = random_x_state(&mut r);
        assert!(mid_x_symmetric(&s) >= discord_x_symmetric(&s).0 - 1e-8);
    }
}

#[test]
fn decomposition_on_random_states() {
    let mut r = rng(4);
    for _ in 0..40 {
        let rho = random_state(&mut r);
        let i = rho.mutual_information().unwrap();
        for side in [Subsystem::A, Subsystem::B] {
            let d = discord_min(&rho, side, GridResolution::default()).unwrap().value;
            let c = classical_correlation(&rho, side, GridResolution::default())
                .unwrap()
                .value;
            assert!((i - d - c).abs() < 5e-4);
        }
    }
}

#[test]
fn pure_states_collapse_all_measures() {
    let mut r = rng(5);
    for _ in 0..30 {
        let rho = random_pure(&mut r);
        let s = rho.partial_trace(Subsystem::A).entropy().unwrap();
        assert!((mid(&rho).unwrap().value - s).abs() < 2e-4);
        for side in [Subsystem::A, Subsystem::B] {
            let d = discord_min(&rho, side, GridResolution::default()).unwrap().value;
            assert!((d - s).abs() < 2e-4, "{d} vs {s}");
        }
    }
}

#[test]
fn discord_is_asymmetric() {
    let rho = rho2();
    let a = discord_min(&rho, Subsystem::A, GridResolution::default())
        .unwrap()
        .value;
    let b = discord_min(&rho, Subsystem::B, GridResolution::default())
        .unwrap()
        .value;
    assert!(a < 1e-6 && b > 0.05, "{a} {b}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_discord_agrees_with_grid(seed in any::<u64>()) {
        let s = random_x_state(&mut rng(seed));
        let grid = discord_min(&s.to_density_matrix().unwrap(), Subsystem::B, GridResolution::default()).unwrap();
        prop_assert!((discord_x_symmetric(&s).0 - grid.value).abs() < 2e-4);
    }

    #[test]
    fn measures_are_bounded(seed in any::<u64>()) {
        let rho = random_state(&mut rng(seed));
        let c = concurrence(&rho).unwrap();
        prop_assert!((0.0..=1.0 + 1e-12).contains(&c));
        let m = mid(&rho).unwrap().value;
        prop_assert!((-1e-10..=2.0 + 1e-10).contains(&m));
    }
}
