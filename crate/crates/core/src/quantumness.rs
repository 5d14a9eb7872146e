//! Non-commutativity `N(A_1..A_n) = sum_{i>j} |[A_i, A_j]|_1` and the increasing chains
//! that certify a single set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{rank_of_span, ComplexMatrix, OrthonormalBasis};
use crate::scalar::Real;
use crate::state::{PureState, WeightedEnsemble};

/// Total non-commutativity with its pairwise terms.
#[derive(Debug, Clone, PartialEq)]
pub struct NcReport<T> {
    pub total: T,
    /// Keyed by `(i, j)` with `i > j`.
    pub pair_terms: BTreeMap<(usize, usize), T>,
}

impl<T: Real> NcReport<T> {
    fn from_terms(pair_terms: BTreeMap<(usize, usize), T>) -> Self {
        // BTreeMap iteration order keeps the reduction bit-stable
        let total = pair_terms.values().copied().sum();
        Self { total, pair_terms }
    }

    pub fn term(&self, i: usize, j: usize) -> Option<T> {
        let key = if i > j { (i, j) } else { (j, i) };
        self.pair_terms.get(&key).copied()
    }
}

/// `|[|u><u|, |v><v|]|_1`, which equals `2x sqrt(1 - x^2)` for `x = |<u|v>|`.
pub fn pair_nc<T: Real>(u: &PureState<T>, v: &PureState<T>) -> Result<T> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    u.projector().commutator(&v.projector())?.trace_norm()
}

/// Non-commutativity of a family of Hermitian operators.
pub fn ensemble_nc<T: Real>(ops: &[ComplexMatrix<T>], tol: T) -> Result<NcReport<T>> {
    if let Some(first) = ops.first() {
        let dim = first.rows();
        for (index, op) in ops.iter().enumerate() {
            if !op.is_square() {
                return Err(Error::NotSquare { rows: op.rows(), cols: op.cols() });
            }
            if op.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: op.rows() });
            }
            let residual = op.hermitian_residual();
            if residual > tol {
                return Err(Error::NotHermitian { index, residual: residual.as_f64() });
            }
        }
    }
    let mut terms = BTreeMap::new();
    for i in 0..ops.len() {
        for j in 0..i {
            terms.insert((i, j), ops[i].commutator(&ops[j])?.trace_norm()?);
        }
    }
    Ok(NcReport::from_terms(terms))
}

/// Non-commutativity of pure states through their projectors.
pub fn states_nc<T: Real>(states: &[PureState<T>], tol: T) -> Result<NcReport<T>> {
    let ops: Vec<_> = states.iter().map(PureState::projector).collect();
    ensemble_nc(&ops, tol)
}

/// Quantumness of `{p_i, rho_i}`: `N` over the weighted members `p_i rho_i`.
pub fn weighted_nc<T: Real>(ens: &WeightedEnsemble<T>, tol: T) -> Result<NcReport<T>> {
    ensemble_nc(&ens.weighted_members(), tol)
}

/// Linearly independent states whose prefix non-commutativities strictly increase.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain<T> {
    /// Positions in the searched list.
    pub indices: Vec<usize>,
    /// `N` of the prefixes of length `2..=len`; empty for a one-element chain.
    pub prefix_nc: Vec<T>,
}

impl<T> Chain<T> {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Cached `pair_nc` values over a fixed state list.
#[derive(Debug, Clone)]
pub(crate) struct PairTable<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Real> PairTable<T> {
    pub(crate) fn new(states: &[PureState<T>]) -> Result<Self> {
        let n = states.len();
        let mut values = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..i {
                let v = pair_nc(&states[i], &states[j])?;
                values[i * n + j] = v;
                values[j * n + i] = v;
            }
        }
        Ok(Self { n, values })
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> T {
        self.values[i * self.n + j]
    }
}

/// Greedy chain over the states at `subset`, with the span dimension already known.
pub(crate) fn chain_in_subset<T: Real>(
    states: &[PureState<T>],
    subset: &[usize],
    table: &PairTable<T>,
    span_dim: usize,
    tol: T,
) -> Option<Chain<T>> {
    let &first = subset.first()?;
    if span_dim <= 1 {
        // all members on one ray: the chain condition is vacuous
        return Some(Chain { indices: vec![first], prefix_nc: Vec::new() });
    }
    let dim = states[first].dim();
    for &start in subset {
        let mut basis = OrthonormalBasis::new(dim);
        basis.try_push(states[start].vector(), tol);
        let mut chosen = vec![start];
        let mut prefix_nc = Vec::with_capacity(span_dim - 1);
        let mut current = T::zero();
        while chosen.len() < span_dim {
            let next = subset.iter().copied().find_map(|j| {
                if chosen.contains(&j) {
                    return None;
                }
                if basis.residual(states[j].vector()).norm() <= tol {
                    return None;
                }
                let gain: T = chosen.iter().map(|&c| table.get(c, j)).sum();
                (gain > tol).then_some((j, gain))
            });
            let Some((j, gain)) = next else { break };
            basis.try_push(states[j].vector(), tol);
            chosen.push(j);
            current = current + gain;
            prefix_nc.push(current);
        }
        if chosen.len() == span_dim {
            return Some(Chain { indices: chosen, prefix_nc });
        }
    }
    None
}

/// Searches for `m = dim span` linearly independent states with
/// `0 < N(s1, s2) < N(s1, s2, s3) < ... < N(s1..sm)`.
///
/// Returns `Ok(None)` when no start vector yields a full-length chain, which happens exactly
/// when the list splits into mutually orthogonal parts.
pub fn find_chain<T: Real>(states: &[PureState<T>], tol: T) -> Result<Option<Chain<T>>> {
    let Some(first) = states.first() else { return Err(Error::Empty) };
    let dim = first.dim();
    if let Some(bad) = states.iter().find(|s| s.dim() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    let vectors: Vec<_> = states.iter().map(|s| s.vector().clone()).collect();
    let span_dim = rank_of_span(&vectors, tol)?;
    let table = PairTable::new(states)?;
    let subset: Vec<usize> = (0..states.len()).collect();
    Ok(chain_in_subset(states, &subset, &table, span_dim, tol))
}
