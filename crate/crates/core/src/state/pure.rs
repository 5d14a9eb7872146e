use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector};
use crate::scalar::Real;

/// Unit-norm ket, optionally labelled.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState<T> {
    vec: ComplexVector<T>,
    label: Option<String>,
}

impl<T: Real> PureState<T> {
    /// Validates `|vec| = 1` within `tol`; does not renormalize.
    pub fn new(vec: ComplexVector<T>, tol: T) -> Result<Self> {
        let norm = vec.norm();
        if (norm - T::one()).abs() >= tol {
            return Err(Error::NotNormalized { label: String::new(), norm: norm.as_f64() });
        }
        Ok(Self { vec, label: None })
    }

    /// Normalizes a nonzero vector.
    pub fn from_unnormalized(vec: ComplexVector<T>) -> Result<Self> {
        let vec = vec.normalized().ok_or(Error::NotNormalized { label: String::new(), norm: 0.0 })?;
        Ok(Self { vec, label: None })
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        Self { vec: ComplexVector::basis(dim, index), label: None }
    }

    /// Equal superposition `(|i> + sign |j>) / sqrt(2)` of two basis kets.
    pub fn pair(dim: usize, i: usize, j: usize, sign: T) -> Self {
        let h = T::FRAC_1_SQRT_2();
        let v = ComplexVector::basis(dim, i)
            .scale(num_complex::Complex::new(h, T::zero()))
            .add(&ComplexVector::basis(dim, j).scale(num_complex::Complex::new(sign * h, T::zero())));
        Self { vec: v, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn vector(&self) -> &ComplexVector<T> {
        &self.vec
    }

    pub fn dim(&self) -> usize {
        self.vec.dim()
    }

    /// `|<self|other>|`
    pub fn overlap(&self, other: &Self) -> Result<T> {
        Ok(self.vec.inner(&other.vec)?.norm())
    }

    /// Same physical ray: `|<u|v>| > 1 - tol`.
    pub fn same_ray(&self, other: &Self, tol: T) -> Result<bool> {
        Ok(self.overlap(other)? > T::one() - tol)
    }

    pub fn projector(&self) -> ComplexMatrix<T> {
        ComplexMatrix::projector(&self.vec)
    }

    /// Applies a unitary; the label is kept.
    pub fn transformed(&self, u: &ComplexMatrix<T>) -> Result<Self> {
        Ok(Self { vec: u.apply(&self.vec)?, label: self.label.clone() })
    }
}
