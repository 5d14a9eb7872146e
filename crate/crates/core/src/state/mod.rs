//! States, product-state sets, ensembles and their interchange formats.

pub mod builtin;
mod document;
mod ensemble;
mod pops;
mod pure;
pub mod random;

pub use builtin::{builtin, BUILTIN_NAMES};
pub(crate) use document::{pairs_from_vector, vector_from_pairs};
pub use document::{parse_pops, to_json, PopsDocument, StateEntry};
pub use ensemble::{EnsembleClass, WeightedEnsemble};
pub use pops::{PopsSet, ProductState, Side};
pub use pure::PureState;
pub use random::random_complete_pops;
