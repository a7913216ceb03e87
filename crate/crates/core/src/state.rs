//! Tomographic probability parametrisation of qubit and ququart states.
//!
//! A qubit density matrix is written as
//!
//! ```text
//! ρ = [[ p1,                     (p2-1/2) - i(p3-1/2) ],
//!      [ (p2-1/2) + i(p3-1/2),   1 - p1               ]]
//! ```
//!
//! so `p1` is the spin-up probability along z, `p2` along x and `p3` along y.
//! A ququart uses fifteen parameters: the diagonal is
//! `(p1+p2+p3-2, 1-p1, 1-p2, 1-p3)` and every upper off-diagonal entry is
//! `(pk-1/2) - i(pl-1/2)` for a fixed pair `(k, l)` (see [`QUQUART_PAIRS`]).
//!
//! Constructors here never reject a non-positive reconstruction. Positivity
//! is a separate check ([`qubit_bloch_check`], [`min_eigenvalue`]).

use alloc::vec::Vec;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigvals, ComplexMatrix, C64};

/// Slack allowed on the `[0, 1]` range check so that valid states read back
/// through floating point are not rejected at `1 + ulp`.
pub const PROB_SLACK: f64 = 1e-12;

/// Tolerance on hermiticity and unit trace for density-matrix inputs.
pub const DENSITY_TOL: f64 = 1e-10;

/// Eigenvalues at or above `-POSITIVITY_TOL` count as nonnegative.
pub const POSITIVITY_TOL: f64 = 1e-12;

/// Upper off-diagonal `(row, col)` of the ququart matrix and the 1-based
/// indices `(k, l)` with `ρ[row, col] = (pk - 1/2) - i(pl - 1/2)`.
pub const QUQUART_PAIRS: [(usize, usize, usize, usize); 6] =
    [(0, 1, 4, 5), (0, 2, 6, 7), (0, 3, 8, 9), (1, 2, 10, 11), (1, 3, 12, 13), (2, 3, 14, 15)];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitProbs(pub [f64; 3]);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbVector15(pub [f64; 15]);

/// One four-outcome distribution plus the twelve dichotomic ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSet {
    pub main: [f64; 4],
    pub dichotomics: [[f64; 2]; 12],
}

/// Unit vector along which the spin projection is measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    nx: f64,
    ny: f64,
    nz: f64,
}

/// Outcome of [`qubit_bloch_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochCheck {
    /// `Σ (pi - 1/2)²`; the ball is `margin <= 1/4`.
    pub margin: f64,
    pub min_eigenvalue: f64,
    pub valid: bool,
}

fn check_unit_interval(values: &[f64]) -> Result<()> {
    for (i, &v) in values.iter().enumerate() {
        if !(-PROB_SLACK..=1.0 + PROB_SLACK).contains(&v) {
            return Err(Error::ProbabilityOutOfRange { index: i + 1, value: v });
        }
    }
    Ok(())
}

fn check_density_shape(rho: &ComplexMatrix, n: usize) -> Result<()> {
    rho.expect_dim(n)?;
    rho.require_hermitian(DENSITY_TOL)?;
    let trace = rho.trace().re;
    if (trace - 1.0).abs() > DENSITY_TOL {
        return Err(Error::WrongTrace { trace, expected: 1.0 });
    }
    Ok(())
}

/// `(a - 1/2) - i(b - 1/2)`
#[inline]
fn upper(a: f64, b: f64) -> C64 {
    C64::new(a - 0.5, -(b - 0.5))
}

impl QubitProbs {
    pub fn new(p1: f64, p2: f64, p3: f64) -> Self {
        Self([p1, p2, p3])
    }

    pub fn check_range(&self) -> Result<()> {
        check_unit_interval(&self.0)
    }

    /// Qubit matrix for these parameters, without any range check.
    pub fn to_matrix_unchecked(&self) -> ComplexMatrix {
        let [p1, p2, p3] = self.0;
        let off = upper(p2, p3);
        ComplexMatrix::from_rows(&[[C64::new(p1, 0.0), off], [off.conj(), C64::new(1.0 - p1, 0.0)]])
    }
}

impl ProbVector15 {
    /// 1-based access, `get(1)` is `p1`.
    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.0[i - 1]
    }

    pub fn check_range(&self) -> Result<()> {
        check_unit_interval(&self.0)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn to_matrix_unchecked(&self) -> ComplexMatrix {
        let p = |i: usize| self.get(i);
        let mut rho = ComplexMatrix::from_real_diag(&[p(1) + p(2) + p(3) - 2.0, 1.0 - p(1), 1.0 - p(2), 1.0 - p(3)]);
        for &(r, c, k, l) in &QUQUART_PAIRS {
            let z = upper(p(k), p(l));
            rho[(r, c)] = z;
            rho[(c, r)] = z.conj();
        }
        rho
    }

    /// Exact inverse of [`to_matrix_unchecked`](Self::to_matrix_unchecked)
    /// for a Hermitian input. Only the upper triangle and the last three
    /// diagonal entries are read.
    pub fn from_matrix_unchecked(rho: &ComplexMatrix) -> Self {
        let mut p = [0.0; 15];
        p[0] = 1.0 - rho[(1, 1)].re;
        p[1] = 1.0 - rho[(2, 2)].re;
        p[2] = 1.0 - rho[(3, 3)].re;
        for &(r, c, k, l) in &QUQUART_PAIRS {
            let z = rho[(r, c)];
            p[k - 1] = z.re + 0.5;
            p[l - 1] = 0.5 - z.im;
        }
        Self(p)
    }
}

impl Direction {
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        let norm = (nx * nx + ny * ny + nz * nz).sqrt();
        if norm.is_nan() || (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitDirection { norm });
        }
        Ok(Self { nx, ny, nz })
    }

    pub fn x() -> Self {
        Self { nx: 1.0, ny: 0.0, nz: 0.0 }
    }

    pub fn y() -> Self {
        Self { nx: 0.0, ny: 1.0, nz: 0.0 }
    }

    pub fn z() -> Self {
        Self { nx: 0.0, ny: 0.0, nz: 1.0 }
    }

    pub fn components(&self) -> [f64; 3] {
        [self.nx, self.ny, self.nz]
    }

    pub fn reversed(&self) -> Self {
        Self { nx: -self.nx, ny: -self.ny, nz: -self.nz }
    }

    /// `(I + n·σ) / 2`
    pub fn up_projector(&self) -> ComplexMatrix {
        let n_sigma = &(&linalg::pauli_x().scale(C64::new(self.nx, 0.0))
            + &linalg::pauli_y().scale(C64::new(self.ny, 0.0)))
            + &linalg::pauli_z().scale(C64::new(self.nz, 0.0));
        (&ComplexMatrix::identity(2) + &n_sigma).scale(C64::new(0.5, 0.0))
    }
}

/// Smallest eigenvalue of a Hermitian matrix (Hermitian part is used).
pub fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    let values: Vec<f64> = hermitian_eigvals(&m.hermitian_part(), 0.0)?;
    Ok(values[0])
}

pub fn qubit_density_from_probs(p: &QubitProbs) -> Result<ComplexMatrix> {
    p.check_range()?;
    Ok(p.to_matrix_unchecked())
}

pub fn qubit_probs_from_density(rho: &ComplexMatrix) -> Result<QubitProbs> {
    check_density_shape(rho, 2)?;
    let z = rho[(0, 1)];
    Ok(QubitProbs([rho[(0, 0)].re, z.re + 0.5, 0.5 - z.im]))
}

/// Bloch-ball margin together with the eigenvalue test that decides validity.
pub fn qubit_bloch_check(p: &QubitProbs) -> BlochCheck {
    let margin = p.0.iter().map(|x| (x - 0.5) * (x - 0.5)).sum();
    // a Hermitian 2x2 always diagonalises, so the fallback is unreachable
    let min_eigenvalue = min_eigenvalue(&p.to_matrix_unchecked()).unwrap_or(f64::NEG_INFINITY);
    BlochCheck { margin, min_eigenvalue, valid: min_eigenvalue >= -POSITIVITY_TOL }
}

/// Checks Hermiticity, unit trace and positivity of an `n x n` density matrix.
pub fn validate_density(rho: &ComplexMatrix, n: usize) -> Result<()> {
    check_density_shape(rho, n)?;
    let min = min_eigenvalue(rho)?;
    if min < -POSITIVITY_TOL {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    Ok(())
}

/// Spin-up probability `w(+, n) = Tr[ρ (I + n·σ) / 2]`.
pub fn tomogram(rho: &ComplexMatrix, n: &Direction) -> Result<f64> {
    check_density_shape(rho, 2)?;
    let min = min_eigenvalue(rho)?;
    if min < -DENSITY_TOL {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    Ok((rho * &n.up_projector()).trace().re)
}

pub fn ququart_density_from_probs(p: &ProbVector15) -> Result<ComplexMatrix> {
    p.check_range()?;
    Ok(p.to_matrix_unchecked())
}

pub fn ququart_probs_from_density(rho: &ComplexMatrix) -> Result<ProbVector15> {
    check_density_shape(rho, 4)?;
    Ok(ProbVector15::from_matrix_unchecked(rho))
}

pub fn distribution_set(p: &ProbVector15) -> Result<DistributionSet> {
    p.check_range()?;
    let sum = p.get(1) + p.get(2) + p.get(3);
    if sum < 2.0 - PROB_SLACK {
        return Err(Error::NegativeDistribution { sum });
    }
    let main = [(sum - 2.0).max(0.0), 1.0 - p.get(1), 1.0 - p.get(2), 1.0 - p.get(3)];
    let mut dichotomics = [[0.0; 2]; 12];
    for (slot, i) in dichotomics.iter_mut().zip(4..=15) {
        *slot = [p.get(i), 1.0 - p.get(i)];
    }
    Ok(DistributionSet { main, dichotomics })
}
