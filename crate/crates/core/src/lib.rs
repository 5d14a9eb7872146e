//! Local (in)distinguishability of bipartite orthogonal product states through ensemble
//! non-commutativity.
//!
//! The non-commutativity of a family of operators is `N(A_1..A_n) = sum_{i>j} |[A_i, A_j]|_1`
//! (trace norm). For a set of product states `|a_i> (x) |b_i>`, the local ensembles
//! `{|a_i>}` and `{|b_i>}` decompose into mutually orthogonal single sets; repeatedly
//! measuring those decompositions and regrouping by the announced outcomes either
//! identifies every state or ends at a subset whose local parts are both single, which
//! witnesses local indistinguishability for a complete set.
//!
//! Everything numerical is generic over [`Real`] (`f64` and `f32`); the aliases at the crate
//! root fix the scalar to `f64`.
//!
//! ```
//! use locc_core::{builtin, distinguish};
//!
//! let set = builtin::<f64>("paper3x4").unwrap();
//! let (_tree, verdict) = distinguish(&set, 1e-8, None).unwrap();
//! assert!(!verdict.distinguishable);
//! assert_eq!(verdict.final_partition.len(), 4);
//! ```

pub mod error;
pub mod linalg;
pub mod protocol;
pub mod quantumness;
pub mod scalar;
pub mod semiclassical;
pub mod single_set;
pub mod state;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector};
pub use protocol::{distinguish, render_protocol, theorem1_class, theorem2_bruteforce, ProtocolTree, Verdict};
pub use quantumness::{ensemble_nc, find_chain, pair_nc, states_nc, weighted_nc, Chain, NcReport};
pub use scalar::Real;
pub use semiclassical::{extract_blocks, nc_curve, qc_nc, rho_x_family, QcState};
pub use single_set::{build_graph, decompose, is_single, OrthGraph, Partition};
pub use state::{
    builtin, parse_pops, random_complete_pops, EnsembleClass, PopsSet, ProductState, PureState, Side, WeightedEnsemble,
};

pub type Matrix = ComplexMatrix<f64>;
pub type Vector = ComplexVector<f64>;
pub type State = PureState<f64>;
pub type Product = ProductState<f64>;
pub type Pops = PopsSet<f64>;
pub type Ensemble = WeightedEnsemble<f64>;
pub type Qc = QcState<f64>;
pub type Report = NcReport<f64>;
pub type Tree = ProtocolTree<f64>;
