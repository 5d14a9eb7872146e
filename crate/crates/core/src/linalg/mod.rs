//! Dense complex linear algebra sized for qudit dimensions.

mod eigen;
mod matrix;
mod span;
mod vector;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::ComplexMatrix;
pub use span::{canonical_basis, orthonormal_basis, projector_onto_span, rank_of_span, OrthonormalBasis};
pub use vector::ComplexVector;

use crate::error::Result;
use crate::scalar::Real;
use num_complex::Complex;

pub fn inner<T: Real>(u: &ComplexVector<T>, v: &ComplexVector<T>) -> Result<Complex<T>> {
    u.inner(v)
}

pub fn commutator<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    a.commutator(b)
}

pub fn trace_norm<T: Real>(a: &ComplexMatrix<T>) -> Result<T> {
    a.trace_norm()
}

pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    a.kron(b)
}
