//! Quantumness of semi-classical states `rho = sum_i X_i (x) |i><i|` with `X_i = p_i rho_i`.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, ComplexMatrix, ComplexVector};
use crate::quantumness::{ensemble_nc, NcReport};
use crate::scalar::Real;
use crate::state::{pairs_from_vector, vector_from_pairs};

/// Eigenvalues down to this are treated as assembly noise and clamped to zero.
const PSD_SLACK: f64 = 1e-10;

/// Weighted blocks on the quantum side, one per orthonormal flag on the classical side.
#[derive(Debug, Clone, PartialEq)]
pub struct QcState<T> {
    blocks: Vec<ComplexMatrix<T>>,
    flag_basis: Vec<ComplexVector<T>>,
}

fn check_flag_basis<T: Real>(flags: &[ComplexVector<T>], tol: T) -> Result<usize> {
    let dim = flags.first().ok_or(Error::Empty)?.dim();
    if flags.len() > dim {
        return Err(Error::FlagBasis { deviation: f64::INFINITY });
    }
    let mut worst = T::zero();
    for (i, u) in flags.iter().enumerate() {
        if u.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: u.dim() });
        }
        for (j, v) in flags.iter().enumerate().skip(i) {
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((u.inner_unchecked(v) - Complex::new(target, T::zero())).norm());
        }
    }
    if worst > tol {
        return Err(Error::FlagBasis { deviation: worst.as_f64() });
    }
    Ok(dim)
}

fn clamp_psd<T: Real>(index: usize, block: ComplexMatrix<T>, tol: T) -> Result<ComplexMatrix<T>> {
    let residual = block.hermitian_residual();
    if residual > tol {
        return Err(Error::NotHermitian { index, residual: residual.as_f64() });
    }
    let eig = hermitian_eigen(&block);
    let min = eig.values[0];
    if min >= T::zero() {
        return Ok(block);
    }
    if min < -T::lit(PSD_SLACK) {
        return Err(Error::InvalidEnsemble(format!("block {index} has negative eigenvalue {min}")));
    }
    let d = ComplexMatrix::from_real_diagonal(&eig.values.iter().map(|&l| l.max(T::zero())).collect::<Vec<_>>());
    Ok(&(&eig.vectors * &d) * &eig.vectors.adjoint())
}

impl<T: Real> QcState<T> {
    /// Validates positivity of every block, unit total trace and an orthonormal flag basis
    /// with one flag per block.
    pub fn new(blocks: Vec<ComplexMatrix<T>>, flag_basis: Vec<ComplexVector<T>>, tol: T) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Empty);
        }
        if blocks.len() != flag_basis.len() {
            return Err(Error::DimensionMismatch { expected: blocks.len(), found: flag_basis.len() });
        }
        check_flag_basis(&flag_basis, tol)?;
        let dim = blocks[0].rows();
        let mut trace = T::zero();
        let mut checked = Vec::with_capacity(blocks.len());
        for (index, block) in blocks.into_iter().enumerate() {
            if !block.is_square() {
                return Err(Error::NotSquare { rows: block.rows(), cols: block.cols() });
            }
            if block.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: block.rows() });
            }
            trace = trace + block.trace().re;
            checked.push(clamp_psd(index, block, tol)?);
        }
        if (trace - T::one()).abs() > tol {
            return Err(Error::InvalidEnsemble(format!("blocks have total trace {trace}")));
        }
        Ok(Self { blocks: checked, flag_basis })
    }

    /// Flags `|0>, |1>, ...` of the computational basis, one per block.
    pub fn with_computational_flags(blocks: Vec<ComplexMatrix<T>>, tol: T) -> Result<Self> {
        let f = blocks.len();
        Self::new(blocks, (0..f.max(1)).map(|i| ComplexVector::basis(f.max(1), i)).collect(), tol)
    }

    pub fn blocks(&self) -> &[ComplexMatrix<T>] {
        &self.blocks
    }

    pub fn flag_basis(&self) -> &[ComplexVector<T>] {
        &self.flag_basis
    }

    pub fn flag_dim(&self) -> usize {
        self.flag_basis[0].dim()
    }

    pub fn quantum_dim(&self) -> usize {
        self.blocks[0].rows()
    }

    /// Density matrix `sum_i X_i (x) |i><i|`, quantum factor first.
    pub fn assemble(&self) -> ComplexMatrix<T> {
        let total = self.quantum_dim() * self.flag_dim();
        self.blocks
            .iter()
            .zip(&self.flag_basis)
            .fold(ComplexMatrix::zeros(total, total), |acc, (x, flag)| &acc + &x.kron(&ComplexMatrix::projector(flag)))
    }

    /// `U X_i U^dagger` on every block.
    pub fn with_local_unitary(&self, u: &ComplexMatrix<T>) -> Self {
        let ud = u.adjoint();
        Self { blocks: self.blocks.iter().map(|x| &(u * x) * &ud).collect(), flag_basis: self.flag_basis.clone() }
    }

    /// Attaches an ancilla `tau` to the quantum side: `X_i -> X_i (x) tau`.
    pub fn with_ancilla(&self, tau: &ComplexMatrix<T>, tol: T) -> Result<Self> {
        Self::new(self.blocks.iter().map(|x| x.kron(tau)).collect(), self.flag_basis.clone(), tol)
    }
}

/// `N(rho_qc) = sum_{i>j} |[X_i, X_j]|_1`; the flag basis does not enter.
pub fn qc_nc<T: Real>(state: &QcState<T>, tol: T) -> Result<NcReport<T>> {
    ensemble_nc(&state.blocks, tol)
}

/// Recovers `X_i = (I (x) <i|) rho (I (x) |i>)`, failing when `rho` carries coherence
/// between flags beyond `tol` (measured as the largest entry of `rho - sum_i X_i (x) |i><i|`).
pub fn extract_blocks<T: Real>(rho: &ComplexMatrix<T>, flag_basis: &[ComplexVector<T>], tol: T) -> Result<QcState<T>> {
    let f = check_flag_basis(flag_basis, tol)?;
    if !rho.is_square() {
        return Err(Error::NotSquare { rows: rho.rows(), cols: rho.cols() });
    }
    if !rho.rows().is_multiple_of(f) {
        return Err(Error::DimensionMismatch { expected: f, found: rho.rows() });
    }
    let d = rho.rows() / f;
    let blocks: Vec<ComplexMatrix<T>> = flag_basis
        .iter()
        .map(|flag| {
            ComplexMatrix::from_fn(d, d, |r, c| {
                let mut acc = Complex::zero();
                for s in 0..f {
                    for t in 0..f {
                        acc = acc + flag[s].conj() * rho[(r * f + s, c * f + t)] * flag[t];
                    }
                }
                acc
            })
        })
        .collect();
    let rebuilt = blocks.iter().zip(flag_basis).fold(ComplexMatrix::zeros(rho.rows(), rho.cols()), |acc, (x, flag)| {
        &acc + &x.kron(&ComplexMatrix::projector(flag))
    });
    let residual = rho.max_abs_diff(&rebuilt);
    if residual > tol {
        return Err(Error::NotSemiClassical { residual: residual.as_f64() });
    }
    QcState::new(blocks, flag_basis.to_vec(), tol)
}

/// `rho_x = (|0><0| (x) |0><0| + |1><1| (x) |1><1| + |phi><phi| (x) |2><2|) / 3` with
/// `|phi> = x|0> + sqrt(1 - x^2)|2>`.
pub fn rho_x_family<T: Real>(x: T) -> Result<QcState<T>> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::OutOfRange { value: x.as_f64(), lo: 0.0, hi: 1.0 });
    }
    let third = T::one() / T::lit(3.0);
    let phi = ComplexVector::from_real(&[x, T::zero(), (T::one() - x * x).max(T::zero()).sqrt()])?;
    let blocks = vec![
        ComplexMatrix::projector(&ComplexVector::basis(3, 0)).scale_real(third),
        ComplexMatrix::projector(&ComplexVector::basis(3, 1)).scale_real(third),
        ComplexMatrix::projector(&phi).scale_real(third),
    ];
    QcState::with_computational_flags(blocks, T::default_tol())
}

/// `(x, N(rho_x))` on a uniform grid over `[0, 1]`.
pub fn nc_curve<T: Real>(samples: usize, tol: T) -> Result<Vec<(T, T)>> {
    if samples < 2 {
        return Err(Error::OutOfRange { value: samples as f64, lo: 2.0, hi: f64::INFINITY });
    }
    let last = T::from_usize(samples - 1).expect("sample count fits");
    (0..samples)
        .map(|k| {
            let x = if k == samples - 1 { T::one() } else { T::from_usize(k).expect("index fits") / last };
            Ok((x, qc_nc(&rho_x_family(x)?, tol)?.total))
        })
        .collect()
}

/// Fixed-point decimal with `sig` significant digits.
pub fn format_significant(v: f64, sig: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{:.*}", sig.saturating_sub(1), 0.0);
    }
    let exponent = v.abs().log10().floor() as i64;
    let decimals = (sig as i64 - 1 - exponent).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // rounding can carry into a new leading digit, e.g. 9.9999 -> 10.000
    let rounded: f64 = s.parse().unwrap_or(v);
    if rounded != 0.0 && (rounded.abs().log10().floor() as i64) > exponent && decimals > 0 {
        return format!("{v:.prec$}", prec = decimals - 1);
    }
    s
}

/// CSV with header `x,N` and 12 significant digits per value.
pub fn curve_csv<T: Real>(rows: &[(T, T)]) -> String {
    let mut out = String::from("x,N\n");
    for (x, n) in rows {
        out.push_str(&format_significant(x.as_f64(), 12));
        out.push(',');
        out.push_str(&format_significant(n.as_f64(), 12));
        out.push('\n');
    }
    out
}

/// JSON form of a semi-classical state: blocks as rows of `[re, im]`, optional flags
/// (computational basis when absent).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QcDocument {
    pub blocks: Vec<Vec<Vec<[f64; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<Vec<Vec<[f64; 2]>>>,
}

impl QcDocument {
    pub fn into_state<T: Real>(self, tol: T) -> Result<QcState<T>> {
        let blocks = self
            .blocks
            .iter()
            .map(|rows| {
                let n = rows.len();
                let mut data = Vec::with_capacity(n * n);
                for row in rows {
                    if row.len() != n {
                        return Err(Error::DimensionMismatch { expected: n, found: row.len() });
                    }
                    data.extend(vector_from_pairs::<T>(row)?.into_entries());
                }
                ComplexMatrix::new(n, n, data)
            })
            .collect::<Result<Vec<_>>>()?;
        match self.flags {
            Some(flags) => {
                let flags = flags.iter().map(|f| vector_from_pairs(f)).collect::<Result<Vec<_>>>()?;
                QcState::new(blocks, flags, tol)
            }
            None => QcState::with_computational_flags(blocks, tol),
        }
    }

    pub fn from_state<T: Real>(state: &QcState<T>) -> Self {
        let blocks = state
            .blocks
            .iter()
            .map(|b| {
                (0..b.rows())
                    .map(|r| (0..b.cols()).map(|c| [b[(r, c)].re.as_f64(), b[(r, c)].im.as_f64()]).collect())
                    .collect()
            })
            .collect();
        Self { blocks, flags: Some(state.flag_basis.iter().map(pairs_from_vector).collect()) }
    }
}

pub fn parse_qc<T: Real>(text: &str, tol: T) -> Result<QcState<T>> {
    serde_json::from_str::<QcDocument>(text)?.into_state(tol)
}
