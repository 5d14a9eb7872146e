//! Named corpora compiled into the crate.

use super::pops::{PopsSet, ProductState};
use super::pure::PureState;
use crate::error::{Error, Result};
use crate::scalar::Real;

pub const BUILTIN_NAMES: [&str; 4] = ["bennett9", "paper3x4", "product3x3", "dominoes2xN"];

/// Ket specification: a basis index or an equal-weight pair with sign.
#[derive(Clone, Copy)]
enum K {
    B(usize),
    P(usize, usize, f64),
}

fn ket<T: Real>(dim: usize, k: K) -> PureState<T> {
    match k {
        K::B(i) => PureState::basis(dim, i),
        K::P(i, j, s) => PureState::pair(dim, i, j, T::lit(s)),
    }
}

fn assemble<T: Real>(m: usize, n: usize, spec: &[(K, K)], complete: bool) -> PopsSet<T> {
    let states = spec
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| ProductState::new(ket(m, a), ket(n, b), format!("psi{}", i + 1)))
        .collect();
    PopsSet::new(m, n, states, complete, T::default_tol()).expect("builtin corpus is valid")
}

const PINWHEEL: [(K, K); 9] = [
    (K::B(1), K::B(1)),
    (K::B(0), K::P(0, 1, 1.0)),
    (K::B(0), K::P(0, 1, -1.0)),
    (K::B(2), K::P(1, 2, 1.0)),
    (K::B(2), K::P(1, 2, -1.0)),
    (K::P(1, 2, 1.0), K::B(0)),
    (K::P(1, 2, -1.0), K::B(0)),
    (K::P(0, 1, 1.0), K::B(2)),
    (K::P(0, 1, -1.0), K::B(2)),
];

/// Nine-state 3x3 pinwheel basis, locally indistinguishable.
pub fn bennett9<T: Real>() -> PopsSet<T> {
    assemble(3, 3, &PINWHEEL, true)
}

/// 3x4 basis: the pinwheel plus `|s>|3>` for `s = 0, 1, 2`.
pub fn paper3x4<T: Real>() -> PopsSet<T> {
    let mut spec = PINWHEEL.to_vec();
    spec.extend([(K::B(0), K::B(3)), (K::B(1), K::B(3)), (K::B(2), K::B(3))]);
    assemble(3, 4, &spec, true)
}

/// Computational product basis `{|s>|t>}` in row-major order, labelled `st`.
pub fn product_basis<T: Real>(m: usize, n: usize) -> PopsSet<T> {
    let states = (0..m)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .map(|(s, t)| ProductState::new(PureState::basis(m, s), PureState::basis(n, t), format!("{s}{t}")))
        .collect();
    PopsSet::new(m, n, states, true, T::default_tol()).expect("product basis is valid")
}

/// 2x4 basis built from domino tiles; distinguishable like every 2xn set.
pub fn dominoes2x4<T: Real>() -> PopsSet<T> {
    let spec = [
        (K::B(0), K::P(0, 1, 1.0)),
        (K::B(0), K::P(0, 1, -1.0)),
        (K::B(1), K::P(1, 2, 1.0)),
        (K::B(1), K::P(1, 2, -1.0)),
        (K::P(0, 1, 1.0), K::B(3)),
        (K::P(0, 1, -1.0), K::B(3)),
        (K::B(0), K::B(2)),
        (K::B(1), K::B(0)),
    ];
    assemble(2, 4, &spec, true)
}

pub fn builtin<T: Real>(name: &str) -> Result<PopsSet<T>> {
    match name {
        "bennett9" => Ok(bennett9()),
        "paper3x4" => Ok(paper3x4()),
        "product3x3" => Ok(product_basis(3, 3)),
        "dominoes2xN" => Ok(dominoes2x4()),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}
