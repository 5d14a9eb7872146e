//! Direct-sum decomposition of a state list into mutually orthogonal single sets.
//!
//! Two states are joined by an edge when `|<u|v>| >= tol`; the single subsets are the
//! connected components of that graph, which makes the decomposition unique.

use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, ComplexMatrix, ComplexVector};
use crate::scalar::Real;
use crate::state::PureState;

/// Non-orthogonality graph of a state list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthGraph {
    nodes: usize,
    adjacency: Vec<Vec<bool>>,
}

impl OrthGraph {
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adjacency[i][j]
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.nodes {
            for j in (i + 1)..self.nodes {
                if self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn build_graph<T: Real>(states: &[PureState<T>], tol: T) -> Result<OrthGraph> {
    let n = states.len();
    if let Some(first) = states.first() {
        if let Some(bad) = states.iter().find(|s| s.dim() != first.dim()) {
            return Err(Error::DimensionMismatch { expected: first.dim(), found: bad.dim() });
        }
    }
    let mut adjacency = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let edge = states[i].overlap(&states[j])? >= tol;
            adjacency[i][j] = edge;
            adjacency[j][i] = edge;
        }
    }
    Ok(OrthGraph { nodes: n, adjacency })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so component ids stay tied to the smallest member
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Disjoint covering index blocks; each block is sorted, blocks ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() <= 1
    }
}

impl OrthGraph {
    pub fn components(&self) -> Partition {
        let mut uf = UnionFind::new(self.nodes);
        for (i, j) in self.edges() {
            uf.union(i, j);
        }
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.nodes];
        for v in 0..self.nodes {
            let r = uf.find(v);
            by_root[r].push(v);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
        blocks.sort_by_key(|b| b[0]);
        Partition { blocks }
    }
}

pub fn decompose<T: Real>(states: &[PureState<T>], tol: T) -> Result<Partition> {
    Ok(build_graph(states, tol)?.components())
}

pub fn is_single<T: Real>(states: &[PureState<T>], tol: T) -> Result<bool> {
    Ok(decompose(states, tol)?.len() == 1)
}

/// One single subset together with an orthonormal basis of its span.
#[derive(Debug, Clone)]
pub struct Block<T> {
    pub indices: Vec<usize>,
    pub span: Vec<ComplexVector<T>>,
}

impl<T: Real> Block<T> {
    pub fn projector(&self) -> ComplexMatrix<T> {
        let dim = self.span[0].dim();
        self.span.iter().fold(ComplexMatrix::zeros(dim, dim), |acc, v| &acc + &ComplexMatrix::projector(v))
    }
}

/// Decomposition with span bases attached, for building measurements.
pub fn decompose_blocks<T: Real>(states: &[PureState<T>], tol: T) -> Result<Vec<Block<T>>> {
    let partition = decompose(states, tol)?;
    partition
        .blocks
        .into_iter()
        .map(|indices| {
            let vectors: Vec<_> = indices.iter().map(|&i| states[i].vector().clone()).collect();
            let span = canonical_basis(&vectors, tol)?.vectors().to_vec();
            Ok(Block { indices, span })
        })
        .collect()
}
