#![allow(dead_code)]

use locc_core::linalg::{ComplexMatrix, ComplexVector};
use locc_core::state::random::haar_state;
use locc_core::PureState;
use nalgebra::DMatrix;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn gauss(rng: &mut impl Rng) -> Complex<f64> {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_matrix(dim: usize, rng: &mut impl Rng) -> ComplexMatrix<f64> {
    ComplexMatrix::from_fn(dim, dim, |_, _| gauss(rng))
}

pub fn random_hermitian(dim: usize, rng: &mut impl Rng) -> ComplexMatrix<f64> {
    let a = random_matrix(dim, rng);
    (&a + &a.adjoint()).scale_real(0.5)
}

/// Random density matrix `G G^dagger / Tr`.
pub fn random_density(dim: usize, rng: &mut impl Rng) -> ComplexMatrix<f64> {
    let g = random_matrix(dim, rng);
    let rho = &g * &g.adjoint();
    let tr = rho.trace().re;
    rho.scale_real(1.0 / tr)
}

/// Unit vector supported on a random nonempty subset of coordinates; sparse supports make
/// orthogonal and non-orthogonal pairs both common.
pub fn sparse_state(dim: usize, rng: &mut impl Rng) -> PureState<f64> {
    loop {
        let entries: Vec<_> =
            (0..dim).map(|_| if rng.random_bool(0.3) { gauss(rng) } else { Complex::new(0.0, 0.0) }).collect();
        let v = ComplexVector::new(entries).unwrap();
        if v.norm() > 1e-3 {
            return PureState::from_unnormalized(v).unwrap();
        }
    }
}

/// Sparse random list with occasional repeated rays (random global phase).
pub fn sparse_list(count: usize, dim: usize, rng: &mut impl Rng) -> Vec<PureState<f64>> {
    let mut out: Vec<PureState<f64>> = Vec::with_capacity(count);
    for _ in 0..count {
        if !out.is_empty() && rng.random_bool(0.15) {
            let k = rng.random_range(0..out.len());
            let phase = Complex::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
            out.push(PureState::new(out[k].vector().scale(phase), 1e-8).unwrap());
        } else {
            out.push(sparse_state(dim, rng));
        }
    }
    out
}

pub fn dense_state(dim: usize, rng: &mut impl Rng) -> PureState<f64> {
    haar_state(dim, rng)
}

pub fn to_nalgebra(m: &ComplexMatrix<f64>) -> DMatrix<Complex<f64>> {
    DMatrix::from_fn(m.rows(), m.cols(), |r, c| m[(r, c)])
}

/// Independent oracle: sum of singular values from nalgebra's SVD.
pub fn oracle_trace_norm(m: &ComplexMatrix<f64>) -> f64 {
    to_nalgebra(m).svd(false, false).singular_values.iter().sum()
}

pub fn closed_form_pair(x: f64) -> f64 {
    2.0 * x * (1.0 - x * x).max(0.0).sqrt()
}
