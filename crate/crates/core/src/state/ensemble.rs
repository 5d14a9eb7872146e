use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix};
use crate::scalar::Real;

/// Classification of a product-state set by the non-commutativity of each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnsembleClass {
    ClassicalClassical,
    ClassicalQuantum,
    QuantumClassical,
    QuantumQuantum,
}

impl EnsembleClass {
    /// From whether N of the A side and of the B side is positive.
    pub fn from_sides(a_quantum: bool, b_quantum: bool) -> Self {
        match (a_quantum, b_quantum) {
            (false, false) => Self::ClassicalClassical,
            (false, true) => Self::ClassicalQuantum,
            (true, false) => Self::QuantumClassical,
            (true, true) => Self::QuantumQuantum,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Self::ClassicalClassical => "classical-classical",
            Self::ClassicalQuantum => "classical-quantum",
            Self::QuantumClassical => "quantum-classical",
            Self::QuantumQuantum => "quantum-quantum",
        }
    }
}

/// Ensemble `{p_i, rho_i}` of density operators.
#[derive(Debug, Clone)]
pub struct WeightedEnsemble<T> {
    items: Vec<(T, ComplexMatrix<T>)>,
}

impl<T: Real> WeightedEnsemble<T> {
    pub fn new(items: Vec<(T, ComplexMatrix<T>)>, tol: T) -> Result<Self> {
        let (_, first) = items.first().ok_or(Error::Empty)?;
        let dim = first.rows();
        let mut total = T::zero();
        for (index, (p, rho)) in items.iter().enumerate() {
            if *p < T::zero() {
                return Err(Error::InvalidEnsemble(format!("negative probability at {index}")));
            }
            if !rho.is_square() {
                return Err(Error::NotSquare { rows: rho.rows(), cols: rho.cols() });
            }
            if rho.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: rho.rows() });
            }
            let residual = rho.hermitian_residual();
            if residual > tol {
                return Err(Error::NotHermitian { index, residual: residual.as_f64() });
            }
            if (rho.trace().re - T::one()).abs() > tol {
                return Err(Error::InvalidEnsemble(format!("member {index} does not have unit trace")));
            }
            let min_eig = hermitian_eigenvalues(rho)[0];
            if min_eig < -tol {
                return Err(Error::InvalidEnsemble(format!(
                    "member {index} is not positive semidefinite (eigenvalue {min_eig})"
                )));
            }
            total = total + *p;
        }
        if (total - T::one()).abs() > tol {
            return Err(Error::InvalidEnsemble(format!("probabilities sum to {total}")));
        }
        Ok(Self { items })
    }

    pub fn items(&self) -> &[(T, ComplexMatrix<T>)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Weighted members `p_i rho_i`.
    pub fn weighted_members(&self) -> Vec<ComplexMatrix<T>> {
        self.items.iter().map(|(p, rho)| rho.scale_real(*p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_probabilities() {
        let rho = ComplexMatrix::<f64>::from_real_diagonal(&[1.0, 0.0]);
        assert!(WeightedEnsemble::new(vec![(0.5, rho.clone()), (0.5, rho.clone())], 1e-8).is_ok());
        assert!(WeightedEnsemble::new(vec![(0.4, rho.clone()), (0.5, rho.clone())], 1e-8).is_err());
        assert!(WeightedEnsemble::new(vec![(1.5, rho.clone()), (-0.5, rho.clone())], 1e-8).is_err());
    }

    #[test]
    fn rejects_non_density_members() {
        let bad_trace = ComplexMatrix::<f64>::from_real_diagonal(&[1.0, 1.0]);
        assert!(WeightedEnsemble::new(vec![(1.0, bad_trace)], 1e-8).is_err());
        let not_psd = ComplexMatrix::<f64>::from_real_diagonal(&[1.5, -0.5]);
        assert!(WeightedEnsemble::new(vec![(1.0, not_psd)], 1e-8).is_err());
        let not_herm = ComplexMatrix::<f64>::from_real_rows(&[&[0.5, 1.0], &[0.0, 0.5]]).unwrap();
        assert!(matches!(WeightedEnsemble::new(vec![(1.0, not_herm)], 1e-8), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn class_mapping() {
        assert_eq!(EnsembleClass::from_sides(false, true), EnsembleClass::ClassicalQuantum);
        assert_eq!(EnsembleClass::from_sides(true, false), EnsembleClass::QuantumClassical);
    }
}
