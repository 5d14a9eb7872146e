//! Constructive LOCC distinguishing procedure, its report, and an exhaustive oracle.

mod oracle;
mod render;
mod tree;

pub use oracle::{theorem1_class, theorem2_bruteforce, DEFAULT_MAX_STATES};
pub use render::{
    format_ket, render_protocol, ChildReport, MeasurementReport, NodeReport, OutcomeReport, ProtocolReport,
};
pub use tree::{distinguish, Action, LeafStatus, Measurement, Outcome, ProtocolNode, ProtocolTree, Verdict};
