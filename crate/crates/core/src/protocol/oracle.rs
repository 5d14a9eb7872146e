//! Exhaustive subset search for the indistinguishability condition, used as an oracle.

use crate::error::{Error, Result};
use crate::linalg::OrthonormalBasis;
use crate::quantumness::{chain_in_subset, PairTable};
use crate::scalar::Real;
use crate::state::{EnsembleClass, PopsSet, PureState, Side};

pub const DEFAULT_MAX_STATES: usize = 16;

/// Class of the set and whether that class alone guarantees local distinguishability.
///
/// The guarantee is one-directional: only a quantum-quantum set can be indistinguishable,
/// so any other class is distinguishable, while quantum-quantum carries no conclusion.
pub fn theorem1_class<T: Real>(set: &PopsSet<T>, tol: T) -> (EnsembleClass, bool) {
    let class = set.classify(tol);
    (class, class != EnsembleClass::QuantumQuantum)
}

fn span_dim<T: Real>(states: &[PureState<T>], subset: &[usize], tol: T) -> usize {
    let mut basis = OrthonormalBasis::new(states[subset[0]].dim());
    for &i in subset {
        basis.try_push(states[i].vector(), tol);
    }
    basis.len()
}

/// Whether the parts at `subset` admit a strict chain with a positive first step, which
/// needs a span of dimension at least two.
fn strict_chain<T: Real>(states: &[PureState<T>], table: &PairTable<T>, subset: &[usize], tol: T) -> bool {
    let dim = span_dim(states, subset, tol);
    dim >= 2 && chain_in_subset(states, subset, table, dim, tol).is_some_and(|c| c.len() == dim)
}

/// Searches every subset of at least two states for one whose A parts and B parts both
/// admit strictly increasing non-commutativity chains. Subsets are scanned largest first,
/// so a returned witness is maximal in size.
///
/// Returns `(true, Some(witness))` when the set is locally indistinguishable.
pub fn theorem2_bruteforce<T: Real>(set: &PopsSet<T>, max_states: usize, tol: T) -> Result<(bool, Option<Vec<usize>>)> {
    let count = set.len();
    if count > max_states || count >= usize::BITS as usize {
        return Err(Error::TooLarge { count, max: max_states });
    }
    let a = set.side_set(Side::A);
    let b = set.side_set(Side::B);
    let table_a = PairTable::new(&a)?;
    let table_b = PairTable::new(&b)?;

    let mut masks: Vec<u64> = (0u64..(1u64 << count)).filter(|m| m.count_ones() >= 2).collect();
    masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut subset = Vec::with_capacity(count);
    for mask in masks {
        subset.clear();
        subset.extend((0..count).filter(|i| mask & (1 << i) != 0));
        if strict_chain(&a, &table_a, &subset, tol) && strict_chain(&b, &table_b, &subset, tol) {
            return Ok((true, Some(subset)));
        }
    }
    Ok((false, None))
}
