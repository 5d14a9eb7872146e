mod common;

use common::{oracle_trace_norm, random_matrix};
use locc_core::linalg::{projector_onto_span, rank_of_span, ComplexMatrix, ComplexVector};
use locc_core::state::random::haar_unitary;
use num_complex::Complex;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn commutator_example_matches_eigen_oracle() {
    let a = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
    let plus = ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
    let c = a.commutator(&plus).unwrap();
    // i[A,B] is Hermitian: its |eigenvalues| are the singular values
    let h = common::to_nalgebra(&c.scale(Complex::new(0.0, 1.0)));
    let eig = nalgebra::linalg::SymmetricEigen::new(h);
    let oracle: f64 = eig.eigenvalues.iter().map(|l| l.abs()).sum();
    assert!((oracle - 1.0).abs() < 1e-12);
    assert!((c.trace_norm().unwrap() - oracle).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_norm_matches_svd_oracle(dim in 1usize..7, seed in any::<u64>()) {
        let a = random_matrix(dim, &mut rng(seed));
        let got = a.trace_norm().unwrap();
        prop_assert!((got - oracle_trace_norm(&a)).abs() < 1e-9 * (1.0 + got));
    }

    #[test]
    fn trace_norm_unitary_invariant(dim in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(dim, &mut r);
        let u: ComplexMatrix<f64> = haar_unitary(dim, &mut r);
        let v: ComplexMatrix<f64> = haar_unitary(dim, &mut r);
        let before = a.trace_norm().unwrap();
        let after = (&(&u * &a) * &v).trace_norm().unwrap();
        prop_assert!((before - after).abs() < 1e-9 * (1.0 + before));
    }

    #[test]
    fn trace_norm_triangle(dim in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(dim, &mut r);
        let b = random_matrix(dim, &mut r);
        let sum = (&a + &b).trace_norm().unwrap();
        prop_assert!(sum <= a.trace_norm().unwrap() + b.trace_norm().unwrap() + 1e-9);
    }

    #[test]
    fn commutator_antisymmetric(dim in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(dim, &mut r);
        let b = random_matrix(dim, &mut r);
        let ab = a.commutator(&b).unwrap();
        let ba = b.commutator(&a).unwrap();
        prop_assert!(ab.max_abs_diff(&(-&ba)) < 1e-12);
    }

    #[test]
    fn projector_is_orthogonal_projector(dim in 1usize..7, count in 1usize..6, seed in any::<u64>()) {
        let mut r = rng(seed);
        let vs: Vec<ComplexVector<f64>> = (0..count).map(|_| common::dense_state(dim, &mut r).vector().clone()).collect();
        let p = projector_onto_span(&vs, 1e-8).unwrap();
        prop_assert!((&p * &p).max_abs_diff(&p) < 1e-9);
        prop_assert!(p.max_abs_diff(&p.adjoint()) < 1e-9);
        for v in &vs {
            prop_assert!(p.apply(v).unwrap().max_abs_diff(v) < 1e-9);
        }
        prop_assert_eq!(rank_of_span(&vs, 1e-8).unwrap(), count.min(dim));
    }

    #[test]
    fn rank_invariant_under_shuffle_and_scaling(dim in 1usize..6, count in 1usize..7, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut vs: Vec<ComplexVector<f64>> =
            (0..count).map(|_| common::sparse_state(dim, &mut r).vector().clone()).collect();
        let before = rank_of_span(&vs, 1e-8).unwrap();
        vs.shuffle(&mut r);
        let scaled: Vec<_> = vs.iter().map(|v| v.scale(common::gauss(&mut r) + Complex::new(0.1, 0.0))).collect();
        prop_assert_eq!(rank_of_span(&vs, 1e-8).unwrap(), before);
        prop_assert_eq!(rank_of_span(&scaled, 1e-8).unwrap(), before);
    }
}
