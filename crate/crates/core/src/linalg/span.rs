use super::matrix::ComplexMatrix;
use super::vector::ComplexVector;
use crate::error::{Error, Result};
use crate::scalar::Real;

fn shared_dim<T: Real>(vectors: &[ComplexVector<T>]) -> Result<usize> {
    let dim = vectors.first().ok_or(Error::Empty)?.dim();
    match vectors.iter().find(|v| v.dim() != dim) {
        Some(bad) => Err(Error::DimensionMismatch { expected: dim, found: bad.dim() }),
        None => Ok(dim),
    }
}

/// Numerical rank of the span: singular values above `tol * s_max`.
pub fn rank_of_span<T: Real>(vectors: &[ComplexVector<T>], tol: T) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    shared_dim(vectors)?;
    let stacked = ComplexMatrix::from_columns(vectors)?;
    let sv = stacked.singular_values();
    let top = sv.first().copied().unwrap_or_else(T::zero);
    if top <= T::zero() {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > tol * top).count())
}

/// Incrementally grown orthonormal family, by modified Gram-Schmidt with one
/// re-orthogonalization pass.
#[derive(Debug, Clone)]
pub struct OrthonormalBasis<T> {
    dim: usize,
    vectors: Vec<ComplexVector<T>>,
}

impl<T: Real> OrthonormalBasis<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, vectors: Vec::new() }
    }

    pub fn vectors(&self) -> &[ComplexVector<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Component of `v` orthogonal to the current span.
    pub fn residual(&self, v: &ComplexVector<T>) -> ComplexVector<T> {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &self.vectors {
                let c = q.inner_unchecked(&w);
                w.sub_scaled(c, q);
            }
        }
        w
    }

    /// Adds `v` if its residual exceeds `tol * |v|`; returns whether the span grew.
    pub fn try_push(&mut self, v: &ComplexVector<T>, tol: T) -> bool {
        assert_eq!(v.dim(), self.dim);
        let scale = v.norm();
        if scale <= T::zero() {
            return false;
        }
        let w = self.residual(v);
        if w.norm() <= tol * scale {
            return false;
        }
        match w.normalized() {
            Some(u) => {
                self.vectors.push(u);
                true
            }
            None => false,
        }
    }

    pub fn projector(&self) -> ComplexMatrix<T> {
        let mut p = ComplexMatrix::zeros(self.dim, self.dim);
        for q in &self.vectors {
            p = &p + &ComplexMatrix::projector(q);
        }
        p
    }
}

pub fn orthonormal_basis<T: Real>(vectors: &[ComplexVector<T>], tol: T) -> Result<OrthonormalBasis<T>> {
    let dim = shared_dim(vectors)?;
    let mut basis = OrthonormalBasis::new(dim);
    for v in vectors {
        basis.try_push(v, tol);
    }
    Ok(basis)
}

/// Orthonormal basis of the span that depends only on the subspace: pivoted Gram-Schmidt
/// over the columns `P|0>, P|1>, ...` of its projector, taking at each step the first column
/// whose residual is at least half the largest. Coordinate subspaces get computational kets.
pub fn canonical_basis<T: Real>(vectors: &[ComplexVector<T>], tol: T) -> Result<OrthonormalBasis<T>> {
    let raw = orthonormal_basis(vectors, tol)?;
    let p = raw.projector();
    let columns: Vec<_> = (0..p.cols()).map(|c| p.column(c)).collect();
    let mut basis = OrthonormalBasis::new(p.rows());
    let half = T::lit(0.5);
    while basis.len() < raw.len() {
        let residuals: Vec<_> = columns.iter().map(|c| basis.residual(c)).collect();
        let best = residuals.iter().map(|r| r.norm()).fold(T::zero(), T::max);
        let Some(pick) = residuals.iter().find(|r| r.norm() >= best * half) else { break };
        match pick.normalized() {
            Some(u) if best > T::epsilon() => basis.vectors.push(u),
            _ => break,
        }
    }
    Ok(if basis.len() == raw.len() { basis } else { raw })
}

/// Orthogonal projector onto the span of `vectors`.
pub fn projector_onto_span<T: Real>(vectors: &[ComplexVector<T>], tol: T) -> Result<ComplexMatrix<T>> {
    Ok(orthonormal_basis(vectors, tol)?.projector())
}
