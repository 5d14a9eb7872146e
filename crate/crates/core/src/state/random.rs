//! Seeded random unitaries, states and complete product bases.

use num_complex::Complex;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::pops::{PopsSet, ProductState};
use super::pure::PureState;
use crate::linalg::{ComplexMatrix, ComplexVector, OrthonormalBasis};
use crate::scalar::Real;

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(T::lit(re * h), T::lit(im * h))
}

/// Haar-random unitary from Gram-Schmidt (QR with positive `R` diagonal) of a Ginibre matrix.
pub fn haar_unitary<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix<T> {
    loop {
        let mut basis = OrthonormalBasis::new(dim);
        for _ in 0..dim {
            let col = ComplexVector::new((0..dim).map(|_| gaussian(rng)).collect()).expect("finite");
            if !basis.try_push(&col, T::lit(1e-6)) {
                break;
            }
        }
        if basis.len() == dim {
            return ComplexMatrix::from_columns(basis.vectors()).expect("square");
        }
    }
}

/// Haar-random unit vector.
pub fn haar_state<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> PureState<T> {
    loop {
        let v = ComplexVector::new((0..dim).map(|_| gaussian(rng)).collect()).expect("finite");
        if v.norm() > T::lit(1e-6) {
            return PureState::from_unnormalized(v).expect("nonzero");
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileShape {
    /// `1 x k` segment within one row.
    Horizontal,
    /// `k x 1` segment within one column.
    Vertical,
    Single,
}

/// Grid cells `(row, col)` sharing one row (or column) of an `m x n` product grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub shape: TileShape,
    /// Sorted.
    pub cells: Vec<(usize, usize)>,
}

/// Random tiling of the `m x n` grid by row and column segments.
///
/// Each of the `depth` placement attempts picks an uncovered cell, an orientation, and a
/// random nonempty set of further uncovered cells in the same row or column. Cells never
/// covered become single tiles, so `depth = 0` gives the all-singles tiling.
pub fn random_tiling<R: Rng + ?Sized>(m: usize, n: usize, depth: usize, rng: &mut R) -> Vec<Tile> {
    let mut covered = vec![vec![false; n]; m];
    let mut tiles = Vec::new();
    for _ in 0..depth {
        let free: Vec<(usize, usize)> =
            (0..m).flat_map(|r| (0..n).map(move |c| (r, c))).filter(|&(r, c)| !covered[r][c]).collect();
        let Some(&(r, c)) = free.choose(rng) else { break };
        let first = if rng.random_bool(0.5) { TileShape::Horizontal } else { TileShape::Vertical };
        let second = if first == TileShape::Horizontal { TileShape::Vertical } else { TileShape::Horizontal };
        for shape in [first, second] {
            let mut partners: Vec<(usize, usize)> = match shape {
                TileShape::Horizontal => (0..n).filter(|&t| t != c && !covered[r][t]).map(|t| (r, t)).collect(),
                _ => (0..m).filter(|&s| s != r && !covered[s][c]).map(|s| (s, c)).collect(),
            };
            if partners.is_empty() {
                continue;
            }
            partners.shuffle(rng);
            let extra = rng.random_range(1..=partners.len());
            let mut cells = vec![(r, c)];
            cells.extend_from_slice(&partners[..extra]);
            cells.sort_unstable();
            for &(s, t) in &cells {
                covered[s][t] = true;
            }
            tiles.push(Tile { shape, cells });
            break;
        }
    }
    for (r, row) in covered.iter().enumerate() {
        for (c, &done) in row.iter().enumerate() {
            if !done {
                tiles.push(Tile { shape: TileShape::Single, cells: vec![(r, c)] });
            }
        }
    }
    tiles
}

/// Complete product basis realizing a tiling: inside each segment a Haar-rotated orthonormal
/// basis of the segment's coordinates, tensored with the fixed cross coordinate.
pub fn pops_from_tiling<T: Real, R: Rng + ?Sized>(m: usize, n: usize, tiles: &[Tile], rng: &mut R) -> PopsSet<T> {
    let mut states = Vec::with_capacity(m * n);
    for tile in tiles {
        let k = tile.cells.len();
        if tile.shape == TileShape::Single || k == 1 {
            let (s, t) = tile.cells[0];
            states.push((PureState::basis(m, s), PureState::basis(n, t)));
            continue;
        }
        let u: ComplexMatrix<T> = haar_unitary(k, rng);
        for j in 0..k {
            let (dim, fixed) = match tile.shape {
                TileShape::Horizontal => (n, tile.cells[0].0),
                _ => (m, tile.cells[0].1),
            };
            let mut v = ComplexVector::zeros(dim);
            for (l, &(s, t)) in tile.cells.iter().enumerate() {
                let coord = if tile.shape == TileShape::Horizontal { t } else { s };
                v = v.add(&ComplexVector::basis(dim, coord).scale(u[(l, j)]));
            }
            let rotated = PureState::from_unnormalized(v).expect("unitary column");
            states.push(match tile.shape {
                TileShape::Horizontal => (PureState::basis(m, fixed), rotated),
                _ => (rotated, PureState::basis(n, fixed)),
            });
        }
    }
    let states =
        states.into_iter().enumerate().map(|(i, (a, b))| ProductState::new(a, b, format!("psi{}", i + 1))).collect();
    PopsSet::new(m, n, states, true, T::default_tol()).expect("tiling yields an orthonormal product basis")
}

/// Deterministic random complete `m x n` product basis.
pub fn random_complete_pops<T: Real>(m: usize, n: usize, seed: u64, depth: usize) -> PopsSet<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tiles = random_tiling(m, n, depth, &mut rng);
    pops_from_tiling(m, n, &tiles, &mut rng)
}
