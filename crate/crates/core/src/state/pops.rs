use serde::{Deserialize, Serialize};

use super::ensemble::EnsembleClass;
use super::pure::PureState;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::quantumness::ensemble_nc;
use crate::scalar::Real;

/// Party holding one tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Self {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// `|a> (x) |b>`
#[derive(Debug, Clone, PartialEq)]
pub struct ProductState<T> {
    pub a: PureState<T>,
    pub b: PureState<T>,
    pub label: String,
    /// Prior probability; carried through but ignored by distinguishability analysis.
    pub p: Option<T>,
}

impl<T: Real> ProductState<T> {
    pub fn new(a: PureState<T>, b: PureState<T>, label: impl Into<String>) -> Self {
        Self { a, b, label: label.into(), p: None }
    }

    pub fn part(&self, side: Side) -> &PureState<T> {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    /// `|<psi|phi>| = |<a|a'>| |<b|b'>|`
    pub fn overlap(&self, other: &Self) -> Result<T> {
        Ok(self.a.overlap(&other.a)? * self.b.overlap(&other.b)?)
    }
}

/// Pairwise orthogonal product states in an `m (x) n` system.
#[derive(Debug, Clone, PartialEq)]
pub struct PopsSet<T> {
    dim_a: usize,
    dim_b: usize,
    states: Vec<ProductState<T>>,
    complete: bool,
}

impl<T: Real> PopsSet<T> {
    /// Validates dimensions, normalization of both factors, pairwise orthogonality and,
    /// when `complete`, that the set has exactly `m * n` members.
    pub fn new(dim_a: usize, dim_b: usize, states: Vec<ProductState<T>>, complete: bool, tol: T) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::Parse("dimensions must be positive".into()));
        }
        if states.is_empty() {
            return Err(Error::Empty);
        }
        for s in &states {
            for (part, dim) in [(&s.a, dim_a), (&s.b, dim_b)] {
                if part.dim() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: part.dim() });
                }
                let norm = part.vector().norm();
                if (norm - T::one()).abs() >= tol {
                    return Err(Error::NotNormalized { label: s.label.clone(), norm: norm.as_f64() });
                }
            }
        }
        for i in 0..states.len() {
            for j in (i + 1)..states.len() {
                let overlap = states[i].overlap(&states[j])?;
                if overlap >= tol {
                    return Err(Error::NotOrthogonal { i, j, overlap: overlap.as_f64() });
                }
            }
        }
        if complete && states.len() != dim_a * dim_b {
            return Err(Error::IncompleteSet { dim_a, dim_b, expected: dim_a * dim_b, found: states.len() });
        }
        Ok(Self { dim_a, dim_b, states, complete })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn dim(&self, side: Side) -> usize {
        match side {
            Side::A => self.dim_a,
            Side::B => self.dim_b,
        }
    }

    pub fn states(&self) -> &[ProductState<T>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Local parts of one side in index order, duplicates preserved.
    pub fn side_set(&self, side: Side) -> Vec<PureState<T>> {
        self.states.iter().map(|s| s.part(side).clone()).collect()
    }

    /// Local parts of one side restricted to `indices`, in the given order.
    pub fn side_subset(&self, side: Side, indices: &[usize]) -> Vec<PureState<T>> {
        indices.iter().map(|&i| self.states[i].part(side).clone()).collect()
    }

    /// Classification by `N(eps^A)` and `N(eps^B)` over unweighted projectors; zero means `N < tol`.
    pub fn classify(&self, tol: T) -> EnsembleClass {
        let side_is_quantum = |side: Side| {
            let ops: Vec<ComplexMatrix<T>> = self.states.iter().map(|s| s.part(side).projector()).collect();
            // projectors are Hermitian by construction
            ensemble_nc(&ops, tol).map(|r| r.total >= tol).unwrap_or(false)
        };
        EnsembleClass::from_sides(side_is_quantum(Side::A), side_is_quantum(Side::B))
    }

    /// Applies `U_A (x) U_B` to every member.
    pub fn with_local_unitaries(&self, ua: &ComplexMatrix<T>, ub: &ComplexMatrix<T>) -> Result<Self> {
        let states = self
            .states
            .iter()
            .map(|s| {
                Ok(ProductState { a: s.a.transformed(ua)?, b: s.b.transformed(ub)?, label: s.label.clone(), p: s.p })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { states, ..self.clone() })
    }

    /// Reorders members: new position `k` holds old member `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.states.len());
        let states = order.iter().map(|&i| self.states[i].clone()).collect();
        Self { states, ..self.clone() }
    }

    /// Swaps the roles of the two parties.
    pub fn swapped(&self) -> Self {
        let states = self
            .states
            .iter()
            .map(|s| ProductState { a: s.b.clone(), b: s.a.clone(), label: s.label.clone(), p: s.p })
            .collect();
        Self { dim_a: self.dim_b, dim_b: self.dim_a, states, complete: self.complete }
    }
}
