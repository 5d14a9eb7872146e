use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexVector, OrthonormalBasis};
use crate::scalar::Real;
use crate::single_set::decompose_blocks;
use crate::state::{PopsSet, PureState, Side};

/// One outcome of a local projective measurement.
#[derive(Debug, Clone)]
pub struct Outcome<T> {
    /// 1-based; 0 is reserved for "no measurement on this side".
    pub label: usize,
    pub projector: ComplexMatrix<T>,
    /// Orthonormal basis of the projector's range.
    pub span: Vec<ComplexVector<T>>,
    /// Global indices of the candidates lying in this outcome's subspace.
    pub candidates: Vec<usize>,
    /// Complement outcome that no candidate can trigger.
    pub impossible: bool,
}

#[derive(Debug, Clone)]
pub struct Measurement<T> {
    pub side: Side,
    pub outcomes: Vec<Outcome<T>>,
}

impl<T: Real> Measurement<T> {
    /// Checks that every outcome projector is an orthogonal projector, the outcomes are
    /// mutually orthogonal, and `P_k |s> = |s>` for each candidate assigned to outcome `k`.
    pub fn is_nondestructive(&self, set: &PopsSet<T>, tol: T) -> bool {
        let dim = set.dim(self.side);
        let mut total = ComplexMatrix::zeros(dim, dim);
        for (i, o) in self.outcomes.iter().enumerate() {
            let p = &o.projector;
            if (p * p).max_abs_diff(p) > tol || p.hermitian_residual() > tol {
                return false;
            }
            for other in &self.outcomes[i + 1..] {
                if (p * &other.projector).max_abs() > tol {
                    return false;
                }
            }
            for &c in &o.candidates {
                let v = set.states()[c].part(self.side).vector();
                match p.apply(v) {
                    Ok(pv) if pv.max_abs_diff(v) <= tol => {}
                    _ => return false,
                }
            }
            total = &total + p;
        }
        total.max_abs_diff(&ComplexMatrix::identity(dim)) <= tol
    }

    fn label_of(&self, candidate: usize) -> Option<usize> {
        self.outcomes.iter().find(|o| o.candidates.contains(&candidate)).map(|o| o.label)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeafStatus {
    Distinguished(usize),
    /// Both local parts are single sets with at least two members.
    Stuck(Vec<usize>),
}

#[derive(Debug, Clone)]
pub enum Action<T> {
    MeasureA(Measurement<T>),
    MeasureB(Measurement<T>),
    MeasureBoth(Measurement<T>, Measurement<T>),
    Leaf(LeafStatus),
}

impl<T> Action<T> {
    pub fn measurements(&self) -> Vec<&Measurement<T>> {
        match self {
            Action::MeasureA(m) | Action::MeasureB(m) => vec![m],
            Action::MeasureBoth(a, b) => vec![a, b],
            Action::Leaf(_) => Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ProtocolNode<T> {
    /// 1-based round in which this node's measurement (if any) is performed.
    pub round: usize,
    pub candidates: Vec<usize>,
    pub action: Action<T>,
    /// Keyed by the announced outcome pair `(j, k)`: A's label then B's, 0 when that side idles.
    pub children: BTreeMap<(usize, usize), ProtocolNode<T>>,
}

impl<T> ProtocolNode<T> {
    /// Leaves in depth-first order with children visited by outcome label.
    pub fn leaves(&self) -> Vec<&ProtocolNode<T>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a ProtocolNode<T>>) {
        if self.children.is_empty() {
            out.push(self);
        }
        for child in self.children.values() {
            child.collect_leaves(out);
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children.values().map(ProtocolNode::depth).max().unwrap_or(0)
    }
}

/// The LOCC protocol for a set, with the labels needed to report it.
#[derive(Debug, Clone)]
pub struct ProtocolTree<T> {
    pub root: ProtocolNode<T>,
    pub labels: Vec<String>,
    pub dims: (usize, usize),
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub distinguishable: bool,
    pub stuck_leaves: Vec<Vec<usize>>,
    /// Candidate sets of all leaves in depth-first order.
    pub final_partition: Vec<Vec<usize>>,
    /// Set when the input was not declared complete: an "indistinguishable" verdict then
    /// only rules out nondestructive projective LOCC.
    pub necessary_only: bool,
}

fn complement_span<T: Real>(dim: usize, span: &OrthonormalBasis<T>, tol: T) -> Vec<ComplexVector<T>> {
    let mut full = span.clone();
    let start = full.len();
    for i in 0..dim {
        full.try_push(&ComplexVector::basis(dim, i), tol.max(T::lit(1e-6)));
    }
    full.vectors()[start..].to_vec()
}

/// Nondestructive measurement splitting `parts` into its single subsets, or `None` when the
/// parts form one single set.
fn split_measurement<T: Real>(
    side: Side,
    dim: usize,
    parts: &[PureState<T>],
    candidates: &[usize],
    tol: T,
) -> Result<Option<Measurement<T>>> {
    let blocks = decompose_blocks(parts, tol)?;
    if blocks.len() <= 1 {
        return Ok(None);
    }
    let mut covered = OrthonormalBasis::new(dim);
    let mut outcomes = Vec::with_capacity(blocks.len() + 1);
    for (k, block) in blocks.iter().enumerate() {
        for v in &block.span {
            covered.try_push(v, tol);
        }
        outcomes.push(Outcome {
            label: k + 1,
            projector: block.projector(),
            span: block.span.clone(),
            candidates: block.indices.iter().map(|&i| candidates[i]).collect(),
            impossible: false,
        });
    }
    let rest = complement_span(dim, &covered, tol);
    if !rest.is_empty() {
        let projector = rest.iter().fold(ComplexMatrix::zeros(dim, dim), |acc, v| &acc + &ComplexMatrix::projector(v));
        outcomes.push(Outcome {
            label: blocks.len() + 1,
            projector,
            span: rest,
            candidates: Vec::new(),
            impossible: true,
        });
    }
    Ok(Some(Measurement { side, outcomes }))
}

struct Builder<'a, T> {
    set: &'a PopsSet<T>,
    tol: T,
    max_rounds: usize,
}

impl<T: Real> Builder<'_, T> {
    fn node(&self, candidates: Vec<usize>, round: usize) -> Result<ProtocolNode<T>> {
        let leaf = |status, candidates| ProtocolNode {
            round,
            candidates,
            action: Action::Leaf(status),
            children: BTreeMap::new(),
        };
        if candidates.len() == 1 {
            return Ok(leaf(LeafStatus::Distinguished(candidates[0]), candidates));
        }
        let measure = |side: Side| {
            let parts = self.set.side_subset(side, &candidates);
            split_measurement(side, self.set.dim(side), &parts, &candidates, self.tol)
        };
        let (ma, mb) = (measure(Side::A)?, measure(Side::B)?);
        if ma.is_none() && mb.is_none() {
            return Ok(leaf(LeafStatus::Stuck(candidates.clone()), candidates));
        }
        if round > self.max_rounds {
            return Err(Error::MaxRoundsExceeded(self.max_rounds));
        }
        let mut children = BTreeMap::new();
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for &c in &candidates {
            let ja = ma.as_ref().map_or(Some(0), |m| m.label_of(c));
            let kb = mb.as_ref().map_or(Some(0), |m| m.label_of(c));
            let (Some(ja), Some(kb)) = (ja, kb) else {
                unreachable!("every candidate lies in one block");
            };
            groups.entry((ja, kb)).or_default().push(c);
        }
        for (key, members) in groups {
            children.insert(key, self.node(members, round + 1)?);
        }
        let action = match (ma, mb) {
            (Some(a), Some(b)) => Action::MeasureBoth(a, b),
            (Some(a), None) => Action::MeasureA(a),
            (None, Some(b)) => Action::MeasureB(b),
            (None, None) => unreachable!(),
        };
        Ok(ProtocolNode { round, candidates, action, children })
    }
}

/// Runs the round-by-round decomposition procedure and returns the protocol and its verdict.
///
/// Each node decomposes its A parts and B parts into single subsets; nontrivial sides are
/// measured (both in the same round when both split) and the candidates are regrouped by the
/// announced outcome pair. Nodes with one candidate are distinguished; nodes whose both
/// sides are single are stuck. `max_rounds` defaults to `m + n`.
pub fn distinguish<T: Real>(set: &PopsSet<T>, tol: T, max_rounds: Option<usize>) -> Result<(ProtocolTree<T>, Verdict)> {
    let (m, n) = set.dims();
    let builder = Builder { set, tol, max_rounds: max_rounds.unwrap_or(m + n) };
    let root = builder.node((0..set.len()).collect(), 1)?;
    let tree = ProtocolTree {
        root,
        labels: set.states().iter().map(|s| s.label.clone()).collect(),
        dims: (m, n),
        complete: set.is_complete(),
    };
    let verdict = tree.verdict();
    Ok((tree, verdict))
}

impl<T> ProtocolTree<T> {
    pub fn verdict(&self) -> Verdict {
        let leaves = self.root.leaves();
        let final_partition: Vec<Vec<usize>> = leaves.iter().map(|l| l.candidates.clone()).collect();
        let stuck_leaves: Vec<Vec<usize>> = leaves
            .iter()
            .filter_map(|l| match &l.action {
                Action::Leaf(LeafStatus::Stuck(s)) => Some(s.clone()),
                _ => None,
            })
            .collect();
        Verdict {
            distinguishable: stuck_leaves.is_empty(),
            stuck_leaves,
            final_partition,
            necessary_only: !self.complete,
        }
    }
}
