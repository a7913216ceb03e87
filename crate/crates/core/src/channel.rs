//! Qubit channel representations and the complete-positivity test.
//!
//! Index conventions (0-based, all qubit indices in `{0, 1}`):
//!
//! * `D_{i i0, j j0}` is the coefficient in `F[ρ]_{ij} = Σ D_{i i0, j j0} ρ_{i0 j0}`.
//! * The dynamical (Choi) matrix stores it at row `2i + i0`, column `2j + j0`,
//!   which gives `D = Σ_k vec(A_k) vec(A_k)†` under row-major `vec`.
//! * The superoperator stores it at row `2i + j`, column `2i0 + j0`, so that
//!   `vec(F[ρ]) = S · vec(ρ)`.

use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eig, ComplexMatrix, ComplexVector, C64, ZERO};

/// Default tolerance for [`verify_cptp`] and Kraus extraction.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Operator-sum form `ρ -> Σ A_k ρ A_k†` of a qubit channel.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    ops: Vec<ComplexMatrix>,
}

/// Dynamical matrix `D` of a qubit channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix(ComplexMatrix);

/// Liouville matrix of a qubit channel acting on row-major `vec(ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperOperator(ComplexMatrix);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Cptp,
    CpNotTp,
    TpNotCp,
    Neither,
}

impl Verdict {
    pub fn is_cp(self) -> bool {
        matches!(self, Verdict::Cptp | Verdict::CpNotTp)
    }

    pub fn is_tp(self) -> bool {
        matches!(self, Verdict::Cptp | Verdict::TpNotCp)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Cptp => "CPTP",
            Verdict::CpNotTp => "CP-not-TP",
            Verdict::TpNotCp => "TP-not-CP",
            Verdict::Neither => "neither",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptpReport {
    pub hermiticity_defect: f64,
    pub trace_value: f64,
    /// `max_{i0,j0} |Σ_i D_{i i0, i j0} - δ_{i0 j0}|`
    pub tp_defect: f64,
    pub min_eigenvalue: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
}

impl KrausSet {
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::EmptyKrausSet);
        }
        for op in &ops {
            op.expect_dim(2)?;
        }
        Ok(Self { ops })
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// `Σ A_k† A_k`
    pub fn completeness(&self) -> ComplexMatrix {
        self.ops.iter().fold(ComplexMatrix::zeros(2, 2), |acc, a| &acc + &(&a.adjoint() * a))
    }

    /// Largest entrywise deviation of `Σ A_k† A_k` from the identity.
    pub fn tp_defect(&self) -> f64 {
        self.completeness().max_abs_diff(&ComplexMatrix::identity(2))
    }
}

impl ChoiMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        m.expect_dim(4)?;
        Ok(Self(m))
    }

    /// Choi matrix of the identity channel, `vec(I) vec(I)†`.
    pub fn identity_channel() -> Self {
        let v = ComplexVector::from_real(&[1.0, 0.0, 0.0, 1.0]);
        Self(v.outer(&v))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// `D_{i i0, j j0}`
    #[inline]
    pub fn element(&self, i: usize, i0: usize, j: usize, j0: usize) -> C64 {
        self.0[(2 * i + i0, 2 * j + j0)]
    }
}

impl SuperOperator {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        m.expect_dim(4)?;
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        rho.expect_dim(2)?;
        linalg::unvec(&self.0.matvec(&linalg::vec(rho)?), 2)
    }
}

/// Swaps the middle two of four qubit indices:
/// `(a, b, c, d) -> (a, c, b, d)` on `row = 2a + b`, `col = 2c + d`.
/// The permutation is its own inverse.
fn reshuffle(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(4, 4, |r, c| {
        let (a, b) = (r / 2, r % 2);
        let (cc, d) = (c / 2, c % 2);
        m[(2 * a + cc, 2 * b + d)]
    })
}

pub fn apply_kraus(k: &KrausSet, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    rho.expect_dim(2)?;
    Ok(k.ops.iter().fold(ComplexMatrix::zeros(2, 2), |acc, a| &acc + &(&(a * rho) * &a.adjoint())))
}

/// `D = Σ_k vec(A_k) vec(A_k)†`
pub fn choi_from_kraus(k: &KrausSet) -> ChoiMatrix {
    let d = k.ops.iter().fold(ComplexMatrix::zeros(4, 4), |acc, a| {
        // every op was checked square at construction
        let v = linalg::vec(a).expect("Kraus operators are 2x2");
        &acc + &v.outer(&v)
    });
    ChoiMatrix(d)
}

pub fn superop_from_choi(d: &ChoiMatrix) -> SuperOperator {
    SuperOperator(reshuffle(&d.0))
}

pub fn choi_from_superop(s: &SuperOperator) -> ChoiMatrix {
    ChoiMatrix(reshuffle(&s.0))
}

/// `F[ρ]_{ij} = Σ_{i0, j0} D_{i i0, j j0} ρ_{i0 j0}`
pub fn apply_channel_via_choi(d: &ChoiMatrix, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    rho.expect_dim(2)?;
    Ok(ComplexMatrix::from_fn(2, 2, |i, j| {
        let mut acc = ZERO;
        for i0 in 0..2 {
            for j0 in 0..2 {
                acc += d.element(i, i0, j, j0) * rho[(i0, j0)];
            }
        }
        acc
    }))
}

/// Kraus operators `√λ · unvec(v)` from the eigenpairs of `d` with `λ > tol`.
///
/// Each eigenvector is rescaled so its largest-modulus component is real and
/// positive, which makes the output deterministic.
pub fn kraus_from_choi(d: &ChoiMatrix, tol: f64) -> Result<KrausSet> {
    let eig = hermitian_eig(&d.0, tol)?;
    let min = eig.min_value();
    if min < -tol {
        return Err(Error::NotCompletelyPositive { min_eigenvalue: min });
    }
    let mut ops = Vec::new();
    for (k, &lambda) in eig.values.iter().enumerate().rev() {
        if lambda <= tol {
            continue;
        }
        let column: Vec<C64> = (0..4).map(|r| eig.vectors[(r, k)]).collect();
        let pivot = column.iter().copied().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap_or(ZERO);
        let phase = if pivot.norm() > 0.0 { pivot.conj() / pivot.norm() } else { C64::new(1.0, 0.0) };
        let scale = phase * lambda.sqrt();
        let v = ComplexVector::new(column.into_iter().map(|z| z * scale).collect());
        ops.push(linalg::unvec(&v, 2)?);
    }
    if ops.is_empty() {
        ops.push(ComplexMatrix::zeros(2, 2));
    }
    KrausSet::new(ops)
}

/// Hermiticity, trace preservation and positivity of a dynamical matrix.
pub fn verify_cptp(d: &ChoiMatrix, tol: f64) -> CptpReport {
    let m = &d.0;
    let hermiticity_defect = m.hermiticity_defect();
    let trace_value = m.trace().re;

    let mut tp_defect = 0.0_f64;
    for i0 in 0..2 {
        for j0 in 0..2 {
            let partial: C64 = (0..2).map(|i| d.element(i, i0, i, j0)).sum();
            let target = if i0 == j0 { 1.0 } else { 0.0 };
            tp_defect = tp_defect.max((partial - target).norm());
        }
    }

    let min_eigenvalue = hermitian_eig(&m.hermitian_part(), f64::INFINITY).map(|e| e.min_value()).unwrap_or(f64::NAN);

    // NaN compares false, so a failed eigensolve never counts as CP
    let cp = hermiticity_defect <= tol && min_eigenvalue >= -tol;
    let tp = tp_defect <= tol;
    let verdict = match (cp, tp) {
        (true, true) => Verdict::Cptp,
        (true, false) => Verdict::CpNotTp,
        (false, true) => Verdict::TpNotCp,
        (false, false) => Verdict::Neither,
    };
    CptpReport { hermiticity_defect, trace_value, tp_defect, min_eigenvalue, tolerance: tol, verdict }
}
