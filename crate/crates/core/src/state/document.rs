//! JSON interchange for product-state sets.
//!
//! ```json
//! {"dims":[m,n], "complete":true,
//!  "states":[{"label":"psi1", "p":0.5, "a":[[re,im],...], "b":[[re,im],...]}, ...]}
//! ```

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::pops::{PopsSet, ProductState};
use super::pure::PureState;
use crate::error::{Error, Result};
use crate::linalg::ComplexVector;
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateEntry {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub a: Vec<[f64; 2]>,
    pub b: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PopsDocument {
    pub dims: [usize; 2],
    pub complete: bool,
    pub states: Vec<StateEntry>,
}

pub(crate) fn vector_from_pairs<T: Real>(pairs: &[[f64; 2]]) -> Result<ComplexVector<T>> {
    let entries = pairs
        .iter()
        .map(|[re, im]| match (T::from_f64(*re), T::from_f64(*im)) {
            (Some(re), Some(im)) => Ok(Complex::new(re, im)),
            _ => Err(Error::NonFinite),
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexVector::new(entries)
}

pub(crate) fn pairs_from_vector<T: Real>(v: &ComplexVector<T>) -> Vec<[f64; 2]> {
    v.entries().iter().map(|z| [z.re.as_f64(), z.im.as_f64()]).collect()
}

impl PopsDocument {
    pub fn into_set<T: Real>(self, tol: T) -> Result<PopsSet<T>> {
        let [m, n] = self.dims;
        let states = self
            .states
            .into_iter()
            .map(|entry| {
                let label = entry.label;
                let part = |pairs: &[[f64; 2]], dim: usize| -> Result<PureState<T>> {
                    if pairs.len() != dim {
                        return Err(Error::DimensionMismatch { expected: dim, found: pairs.len() });
                    }
                    PureState::new(vector_from_pairs(pairs)?, tol).map_err(|e| match e {
                        Error::NotNormalized { norm, .. } => Error::NotNormalized { label: label.clone(), norm },
                        other => other,
                    })
                };
                let a = part(&entry.a, m)?;
                let b = part(&entry.b, n)?;
                let p = entry.p.map(|p| T::from_f64(p).ok_or(Error::NonFinite)).transpose()?;
                Ok(ProductState { a, b, label, p })
            })
            .collect::<Result<Vec<_>>>()?;
        PopsSet::new(m, n, states, self.complete, tol)
    }

    pub fn from_set<T: Real>(set: &PopsSet<T>) -> Self {
        let (m, n) = set.dims();
        let states = set
            .states()
            .iter()
            .map(|s| StateEntry {
                label: s.label.clone(),
                p: s.p.map(Real::as_f64),
                a: pairs_from_vector(s.a.vector()),
                b: pairs_from_vector(s.b.vector()),
            })
            .collect();
        Self { dims: [m, n], complete: set.is_complete(), states }
    }
}

/// Parses and validates a product-state set document.
pub fn parse_pops<T: Real>(text: &str, tol: T) -> Result<PopsSet<T>> {
    let doc: PopsDocument = serde_json::from_str(text)?;
    doc.into_set(tol)
}

pub fn to_json<T: Real>(set: &PopsSet<T>) -> String {
    serde_json::to_string_pretty(&PopsDocument::from_set(set)).expect("document serializes")
}
