//! Text and JSON reports of a protocol tree.

use serde::Serialize;

use super::tree::{Action, LeafStatus, Measurement, ProtocolNode, ProtocolTree};
use crate::linalg::ComplexVector;
use crate::scalar::Real;

const SNAP: f64 = 1e-14;

fn clean(x: f64) -> f64 {
    if x.abs() < SNAP {
        0.0
    } else {
        x
    }
}

fn fmt_coeff(re: f64, im: f64) -> String {
    if im.abs() < 1e-9 {
        format!("{re:.4}")
    } else if re.abs() < 1e-9 {
        format!("{im:.4}i")
    } else {
        format!("({re:.4}{im:+.4}i)")
    }
}

/// Ket notation, e.g. `0.7071|0> + 0.7071|1>`; exact unit coefficients are elided.
pub fn format_ket<T: Real>(v: &ComplexVector<T>) -> String {
    let mut out = String::new();
    for (i, z) in v.entries().iter().enumerate() {
        let (re, im) = (z.re.as_f64(), z.im.as_f64());
        if re.abs() < 1e-9 && im.abs() < 1e-9 {
            continue;
        }
        let negative = im.abs() < 1e-9 && re < 0.0;
        let body = if (re.abs() - 1.0).abs() < 1e-12 && im.abs() < 1e-9 {
            String::new()
        } else {
            fmt_coeff(if negative { -re } else { re }, im)
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&format!("{body}|{i}>"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeReport {
    pub label: usize,
    /// Orthonormal spanning vectors of the outcome subspace, as `[re, im]` pairs.
    pub span: Vec<Vec<[f64; 2]>>,
    pub candidates: Vec<usize>,
    pub impossible: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasurementReport {
    pub side: String,
    pub outcomes: Vec<OutcomeReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeafReport {
    pub status: String,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChildReport {
    /// Announced outcome pair `[j, k]`; 0 means that side did not measure.
    pub outcome: [usize; 2],
    pub node: NodeReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeReport {
    pub round: usize,
    pub candidates: Vec<usize>,
    pub action: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub measurements: Vec<MeasurementReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaf: Option<LeafReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<ChildReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProtocolReport {
    pub verdict: String,
    pub distinguishable: bool,
    pub complete: bool,
    pub necessary_only: bool,
    pub dims: [usize; 2],
    pub labels: Vec<String>,
    pub stuck_leaves: Vec<Vec<usize>>,
    pub partition: Vec<Vec<usize>>,
    pub tree: NodeReport,
    #[serde(skip)]
    text: String,
}

impl ProtocolReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> &str {
        &self.text
    }
}

fn measurement_report<T: Real>(m: &Measurement<T>) -> MeasurementReport {
    MeasurementReport {
        side: m.side.to_string(),
        outcomes: m
            .outcomes
            .iter()
            .map(|o| OutcomeReport {
                label: o.label,
                span: o
                    .span
                    .iter()
                    .map(|v| v.entries().iter().map(|z| [clean(z.re.as_f64()), clean(z.im.as_f64())]).collect())
                    .collect(),
                candidates: o.candidates.clone(),
                impossible: o.impossible,
            })
            .collect(),
    }
}

fn node_report<T: Real>(node: &ProtocolNode<T>) -> NodeReport {
    let (action, leaf) = match &node.action {
        Action::MeasureA(_) => ("measure_a", None),
        Action::MeasureB(_) => ("measure_b", None),
        Action::MeasureBoth(_, _) => ("measure_both", None),
        Action::Leaf(LeafStatus::Distinguished(i)) => {
            ("leaf", Some(LeafReport { status: "distinguished".into(), indices: vec![*i] }))
        }
        Action::Leaf(LeafStatus::Stuck(s)) => ("leaf", Some(LeafReport { status: "stuck".into(), indices: s.clone() })),
    };
    NodeReport {
        round: node.round,
        candidates: node.candidates.clone(),
        action: action.into(),
        measurements: node.action.measurements().into_iter().map(measurement_report).collect(),
        leaf,
        children: node
            .children
            .iter()
            .map(|(&(j, k), child)| ChildReport { outcome: [j, k], node: node_report(child) })
            .collect(),
    }
}

fn names(labels: &[String], indices: &[usize]) -> String {
    indices.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join(", ")
}

fn write_text<T: Real>(node: &ProtocolNode<T>, labels: &[String], indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match &node.action {
        Action::Leaf(LeafStatus::Distinguished(i)) => {
            out.push_str(&format!("{pad}identified {}\n", labels[*i]));
        }
        Action::Leaf(LeafStatus::Stuck(s)) => {
            out.push_str(&format!("{pad}stuck: {{{}}} (both local parts single)\n", names(labels, s)));
        }
        action => {
            out.push_str(&format!("{pad}Round {} on {{{}}}\n", node.round, names(labels, &node.candidates)));
            for m in action.measurements() {
                out.push_str(&format!("{pad}  {} measures:\n", m.side));
                for o in &m.outcomes {
                    let span = o.span.iter().map(format_ket).collect::<Vec<_>>().join(", ");
                    let who = if o.impossible { "no candidates".to_string() } else { names(labels, &o.candidates) };
                    out.push_str(&format!("{pad}    outcome {}: span{{{span}}} -> {who}\n", o.label));
                }
            }
            for (&(j, k), child) in &node.children {
                out.push_str(&format!("{pad}  announce ({j},{k}):\n"));
                write_text(child, labels, indent + 2, out);
            }
        }
    }
}

/// Builds the JSON-serializable report and its text narrative.
pub fn render_protocol<T: Real>(tree: &ProtocolTree<T>) -> ProtocolReport {
    let verdict = tree.verdict();
    let mut text = String::new();
    let (m, n) = tree.dims;
    text.push_str(&format!("{} states in {m}x{n}\n", tree.labels.len()));
    write_text(&tree.root, &tree.labels, 0, &mut text);
    let word = if verdict.distinguishable { "distinguishable" } else { "indistinguishable" };
    text.push_str(&format!("verdict: locally {word}\n"));
    text.push_str("partition:");
    for part in &verdict.final_partition {
        text.push_str(&format!(" {{{}}}", names(&tree.labels, part)));
    }
    text.push('\n');
    if verdict.necessary_only {
        text.push_str("note: set not declared complete; verdict covers nondestructive projective LOCC only\n");
    }
    ProtocolReport {
        verdict: word.into(),
        distinguishable: verdict.distinguishable,
        complete: tree.complete,
        necessary_only: verdict.necessary_only,
        dims: [m, n],
        labels: tree.labels.clone(),
        stuck_leaves: verdict.stuck_leaves,
        partition: verdict.final_partition,
        tree: node_report(&tree.root),
        text,
    }
}
