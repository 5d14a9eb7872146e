use std::ops::Index;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector<T> {
    entries: Vec<Complex<T>>,
}

impl<T: Real> ComplexVector<T> {
    pub fn new(entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty);
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { entries })
    }

    pub fn from_real(values: &[T]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex::new(v, T::zero())).collect())
    }

    /// Computational basis ket `|index>` in `dim` dimensions.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut entries = vec![Complex::zero(); dim];
        entries[index] = Complex::one();
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1);
        Self { entries: vec![Complex::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Complex<T>> {
        self.entries
    }

    /// `<self|other>`, conjugate-linear in the first argument.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> Complex<T> {
        self.entries.iter().zip(&other.entries).fold(Complex::zero(), |acc, (u, v)| acc + u.conj() * v)
    }

    pub fn norm(&self) -> T {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// Returns the unit vector along `self`, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n <= T::zero() {
            return None;
        }
        Some(self.scale(Complex::new(n.recip(), T::zero())))
    }

    pub fn scale(&self, factor: Complex<T>) -> Self {
        Self { entries: self.entries.iter().map(|z| z * factor).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    /// `self - factor * other`.
    pub(crate) fn sub_scaled(&mut self, factor: Complex<T>, other: &Self) {
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = *a - factor * b;
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let entries = self.entries.iter().flat_map(|a| other.entries.iter().map(move |b| a * b)).collect();
        Self { entries }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }
}

impl<T> Index<usize> for ComplexVector<T> {
    type Output = Complex<T>;

    fn index(&self, i: usize) -> &Complex<T> {
        &self.entries[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn inner_examples() {
        let e0 = ComplexVector::<f64>::basis(2, 0);
        let e1 = ComplexVector::<f64>::basis(2, 1);
        assert_eq!(e0.inner(&e1).unwrap(), c(0.0, 0.0));
        assert_eq!(e0.inner(&e0).unwrap(), c(1.0, 0.0));
        let plus = ComplexVector::from_real(&[0.5f64.sqrt(), 0.5f64.sqrt()]).unwrap();
        let z = e0.inner(&plus).unwrap();
        assert!((z.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8 && z.im == 0.0);
    }

    #[test]
    fn inner_is_conjugate_symmetric() {
        let u = ComplexVector::new(vec![c(0.3, -0.2), c(0.1, 0.9)]).unwrap();
        let v = ComplexVector::new(vec![c(-0.5, 0.4), c(0.7, 0.2)]).unwrap();
        let uv = u.inner(&v).unwrap();
        let vu = v.inner(&u).unwrap();
        assert!((uv - vu.conj()).norm() < 1e-15);
        // conjugation sits on the first argument
        let iu = u.scale(c(0.0, 1.0));
        assert!((iu.inner(&v).unwrap() - uv * c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let u = ComplexVector::<f64>::basis(2, 0);
        let v = ComplexVector::<f64>::basis(3, 0);
        assert_eq!(u.inner(&v), Err(Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn kron_of_basis_kets() {
        let a = ComplexVector::<f64>::basis(2, 0);
        let b = ComplexVector::<f64>::basis(2, 1);
        assert_eq!(a.kron(&b), ComplexVector::basis(4, 1));
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(ComplexVector::from_real(&[1.0, f64::NAN]), Err(Error::NonFinite));
        assert_eq!(ComplexVector::<f64>::new(vec![]), Err(Error::Empty));
    }
}
