//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.

use num_complex::Complex;
use num_traits::Zero;

use super::matrix::ComplexMatrix;
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `H = V diag(values) V^dagger` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    /// Ascending.
    pub values: Vec<T>,
    /// Unitary whose columns are eigenvectors matching `values`.
    pub vectors: ComplexMatrix<T>,
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Only the Hermitian part of `h` is used; the caller is responsible for Hermiticity.
pub fn hermitian_eigenvalues<T: Real>(h: &ComplexMatrix<T>) -> Vec<T> {
    jacobi(h, false).values
}

pub fn hermitian_eigen<T: Real>(h: &ComplexMatrix<T>) -> HermitianEigen<T> {
    jacobi(h, true)
}

fn off_diagonal_sq<T: Real>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut s = T::zero();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s = s + a[(r, c)].norm_sqr();
            }
        }
    }
    s
}

fn jacobi<T: Real>(h: &ComplexMatrix<T>, want_vectors: bool) -> HermitianEigen<T> {
    assert!(h.is_square(), "eigensolver needs a square matrix");
    let n = h.rows();
    let half = T::lit(0.5);
    // symmetrize so tiny Hermiticity noise cannot stall the sweep
    let mut a = ComplexMatrix::from_fn(n, n, |r, c| (h[(r, c)] + h[(c, r)].conj()) * half);
    let mut v = if want_vectors { Some(ComplexMatrix::identity(n)) } else { None };

    let total = a.frobenius_norm();
    let eps = T::epsilon();
    let stop = (eps * total) * (eps * total);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(&a) <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= T::min_positive_value() {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                // skip rotations that cannot change the diagonal at working precision
                if r < eps * eps * (app.abs() + aqq.abs()) {
                    a[(p, q)] = Complex::zero();
                    a[(q, p)] = Complex::zero();
                    continue;
                }
                let phase = apq / r;
                let tau = (aqq - app) / (r + r);
                let t = if tau == T::zero() {
                    T::one()
                } else {
                    tau.signum() / (tau.abs() + (T::one() + tau * tau).sqrt())
                };
                let cs = (T::one() + t * t).sqrt().recip();
                let sn = t * cs;
                // G = W R with W = diag(1, conj(phase)) on the (p, q) plane
                let g_pp = Complex::new(cs, T::zero());
                let g_pq = Complex::new(sn, T::zero());
                let g_qp = phase.conj() * (-sn);
                let g_qq = phase.conj() * cs;
                rotate(&mut a, p, q, g_pp, g_pq, g_qp, g_qq);
                a[(p, q)] = Complex::zero();
                a[(q, p)] = Complex::zero();
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());
                if let Some(v) = v.as_mut() {
                    rotate_columns(v, p, q, g_pp, g_pq, g_qp, g_qq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).expect("finite eigenvalue"));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = match v {
        Some(v) => ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]),
        None => ComplexMatrix::zeros(1, 1),
    };
    HermitianEigen { values, vectors }
}

fn rotate_columns<T: Real>(
    m: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    g_pp: Complex<T>,
    g_pq: Complex<T>,
    g_qp: Complex<T>,
    g_qq: Complex<T>,
) {
    for r in 0..m.rows() {
        let mp = m[(r, p)];
        let mq = m[(r, q)];
        m[(r, p)] = mp * g_pp + mq * g_qp;
        m[(r, q)] = mp * g_pq + mq * g_qq;
    }
}

/// `A <- G^dagger A G` for a unitary acting on the (p, q) plane.
fn rotate<T: Real>(
    a: &mut ComplexMatrix<T>,
    p: usize,
    q: usize,
    g_pp: Complex<T>,
    g_pq: Complex<T>,
    g_qp: Complex<T>,
    g_qq: Complex<T>,
) {
    rotate_columns(a, p, q, g_pp, g_pq, g_qp, g_qq);
    for c in 0..a.cols() {
        let ap = a[(p, c)];
        let aq = a[(q, c)];
        a[(p, c)] = g_pp.conj() * ap + g_qp.conj() * aq;
        a[(q, c)] = g_pq.conj() * ap + g_qq.conj() * aq;
    }
}
