//! Probability representation of qubit channels.
//!
//! The dynamical matrix `D` of a trace-preserving qubit channel has trace 2,
//! so `D / 2` is a ququart state and carries fifteen probabilities. Both
//! directions are affine maps on the row-major vectorisation:
//!
//! ```text
//! P      = A · vec(D) + b        A: 15x16, b ∈ R^15
//! vec(D) = B · P      + c        B: 16x15, c ∈ C^16
//! ```
//!
//! The nonzero entries are listed below with 1-based indices. `A·B = I` and
//! `A·c + b = 0` hold exactly in floating point and are asserted when the
//! constants are built.

use crate::channel::ChoiMatrix;
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, ComplexVector, C64};
use crate::state::ProbVector15;

/// Imaginary residue tolerated in `A · vec(D) + b` before the input is
/// declared non-Hermitian.
pub const IMAGINARY_TOL: f64 = 1e-9;

const A_MINUS_HALF: [(usize, usize); 3] = [(1, 6), (2, 11), (3, 16)];
const A_QUARTER: [(usize, usize); 12] =
    [(4, 2), (4, 5), (6, 3), (6, 9), (8, 4), (8, 13), (10, 7), (10, 10), (12, 8), (12, 14), (14, 12), (14, 15)];
/// `(row, col_plus, col_minus)`: `A[row, col_plus] = i/4`, `A[row, col_minus] = -i/4`.
const A_IMAG: [(usize, usize, usize); 6] = [(5, 2, 5), (7, 3, 9), (9, 4, 13), (11, 7, 10), (13, 8, 14), (15, 12, 15)];

/// `(row, col, sign)` for `B[row, col] = 2·sign`.
const B_REAL: [(usize, usize, f64); 18] = [
    (1, 1, 1.0),
    (1, 2, 1.0),
    (1, 3, 1.0),
    (2, 4, 1.0),
    (3, 6, 1.0),
    (4, 8, 1.0),
    (5, 4, 1.0),
    (6, 1, -1.0),
    (7, 10, 1.0),
    (8, 12, 1.0),
    (9, 6, 1.0),
    (10, 10, 1.0),
    (11, 2, -1.0),
    (12, 14, 1.0),
    (13, 8, 1.0),
    (14, 12, 1.0),
    (15, 14, 1.0),
    (16, 3, -1.0),
];
/// `(row, col, sign)` for `B[row, col] = -2i·sign`. Upper-triangle positions
/// of `D` take `-2i`, their mirrored lower-triangle positions `+2i`.
/// `B[15,15]` is `+2i`: `vec(D)_15 = D[4,3]` must be the conjugate of
/// `D[3,4]`, and `A·B = I` fails with the opposite sign.
const B_IMAG: [(usize, usize, f64); 12] = [
    (2, 5, 1.0),
    (3, 7, 1.0),
    (4, 9, 1.0),
    (5, 5, -1.0),
    (7, 11, 1.0),
    (8, 13, 1.0),
    (9, 7, -1.0),
    (10, 11, -1.0),
    (12, 15, 1.0),
    (13, 9, -1.0),
    (14, 13, -1.0),
    (15, 15, -1.0),
];
const C_UPPER: [usize; 6] = [2, 3, 4, 7, 8, 12];
const C_LOWER: [usize; 6] = [5, 9, 10, 13, 14, 15];

/// The two affine maps between `vec(D)` and the channel probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineConstants {
    to_probs: ComplexMatrix,
    offset: [f64; 15],
    to_choi: ComplexMatrix,
    choi_offset: ComplexVector,
}

/// Fifteen probabilities describing a qubit channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelProbs(pub ProbVector15);

/// Residuals of `p1 + p3 = 3/2`, `p4 + p14 = 1`, `p5 + p15 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintCheck {
    pub residuals: [f64; 3],
    pub satisfied: bool,
}

impl Default for AffineConstants {
    fn default() -> Self {
        Self::new()
    }
}

impl AffineConstants {
    /// Builds the constants from their index lists.
    ///
    /// # Panics
    ///
    /// If `A·B = I` or `A·c + b = 0` fails, which would mean a transcription
    /// error in the tables above.
    pub fn new() -> Self {
        let mut a = ComplexMatrix::zeros(15, 16);
        for &(r, c) in &A_MINUS_HALF {
            a[(r - 1, c - 1)] = C64::new(-0.5, 0.0);
        }
        for &(r, c) in &A_QUARTER {
            a[(r - 1, c - 1)] = C64::new(0.25, 0.0);
        }
        for &(r, plus, minus) in &A_IMAG {
            a[(r - 1, plus - 1)] = C64::new(0.0, 0.25);
            a[(r - 1, minus - 1)] = C64::new(0.0, -0.25);
        }

        let mut b = ComplexMatrix::zeros(16, 15);
        for &(r, c, s) in &B_REAL {
            b[(r - 1, c - 1)] = C64::new(2.0 * s, 0.0);
        }
        for &(r, c, s) in &B_IMAG {
            b[(r - 1, c - 1)] = C64::new(0.0, -2.0 * s);
        }

        let mut c = ComplexVector::zeros(16);
        c[0] = C64::new(-4.0, 0.0);
        for i in [6, 11, 16] {
            c[i - 1] = C64::new(2.0, 0.0);
        }
        for i in C_UPPER {
            c[i - 1] = C64::new(-1.0, 1.0);
        }
        for i in C_LOWER {
            c[i - 1] = C64::new(-1.0, -1.0);
        }

        let mut offset = [0.5; 15];
        offset[..3].fill(1.0);

        let consts = Self { to_probs: a, offset, to_choi: b, choi_offset: c };
        let (inverse_defect, offset_defect) = consts.identity_defects();
        assert!(
            inverse_defect == 0.0 && offset_defect == 0.0,
            "affine constants inconsistent: |A·B - I| = {inverse_defect}, |A·c + b| = {offset_defect}"
        );
        consts
    }

    /// Largest entrywise deviations of `A·B` from `I` and of `A·c + b` from 0.
    pub fn identity_defects(&self) -> (f64, f64) {
        let ab = &self.to_probs * &self.to_choi;
        let inverse_defect = ab.max_abs_diff(&ComplexMatrix::identity(15));
        let ac = self.to_probs.matvec(&self.choi_offset);
        let offset_defect = ac.iter().zip(&self.offset).map(|(z, &b)| (z + b).norm()).fold(0.0, f64::max);
        (inverse_defect, offset_defect)
    }

    /// `A`, 15x16.
    pub fn to_probs(&self) -> &ComplexMatrix {
        &self.to_probs
    }

    /// `b`
    pub fn offset(&self) -> &[f64; 15] {
        &self.offset
    }

    /// `B`, 16x15.
    pub fn to_choi(&self) -> &ComplexMatrix {
        &self.to_choi
    }

    /// `c`
    pub fn choi_offset(&self) -> &ComplexVector {
        &self.choi_offset
    }

    pub fn probs_from_choi(&self, d: &ChoiMatrix) -> Result<ChannelProbs> {
        let v = linalg::vec(d.matrix())?;
        let raw = self.to_probs.matvec(&v);
        let residue = raw.max_imag();
        if residue.is_nan() || residue > IMAGINARY_TOL {
            return Err(Error::ImaginaryResidue { residue });
        }
        let mut p = [0.0; 15];
        for (slot, (z, b)) in p.iter_mut().zip(raw.iter().zip(&self.offset)) {
            *slot = z.re + b;
        }
        Ok(ChannelProbs(ProbVector15(p)))
    }

    pub fn choi_from_probs(&self, p: &ChannelProbs) -> ChoiMatrix {
        let pv = ComplexVector::from_real(&p.0 .0);
        let v = &self.to_choi.matvec(&pv) + &self.choi_offset;
        let m = linalg::unvec(&v, 4).expect("B·P + c has 16 entries");
        ChoiMatrix::new(m).expect("4x4 by construction")
    }
}

impl ChannelProbs {
    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.0.get(i)
    }

    pub fn as_array(&self) -> &[f64; 15] {
        &self.0 .0
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0.max_abs_diff(&other.0)
    }
}

pub fn build_constants() -> AffineConstants {
    AffineConstants::new()
}

pub fn probs_from_choi(d: &ChoiMatrix) -> Result<ChannelProbs> {
    AffineConstants::new().probs_from_choi(d)
}

pub fn choi_from_probs(p: &ChannelProbs) -> ChoiMatrix {
    AffineConstants::new().choi_from_probs(p)
}

pub fn check_channel_prob_constraints(p: &ChannelProbs, tol: f64) -> ConstraintCheck {
    let residuals =
        [(p.get(1) + p.get(3) - 1.5).abs(), (p.get(4) + p.get(14) - 1.0).abs(), (p.get(5) + p.get(15) - 1.0).abs()];
    let satisfied = residuals.iter().all(|&r| r <= tol);
    ConstraintCheck { residuals, satisfied }
}

/// Probabilities of the identity channel: every entry 1/2 except
/// `p1 = p2 = p8 = 1`.
pub fn identity_channel_probs() -> ChannelProbs {
    let mut p = [0.5; 15];
    p[0] = 1.0;
    p[1] = 1.0;
    p[2] = 0.5;
    p[7] = 1.0;
    ChannelProbs(ProbVector15(p))
}
