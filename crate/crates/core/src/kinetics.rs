//! Unitary evolution of a qubit channel in the probability representation.
//!
//! For `U(t) = exp(-iHt)` the dynamical matrix is `D = vec(U) vec(U)†` and
//! obeys `i dD/dt = [H ⊗ I₂, D]`. Under row-major vectorisation this reads
//! `i d vec(D)/dt = Q · vec(D)` with
//!
//! ```text
//! Q = (H ⊗ I₂) ⊗ I₄ - I₄ ⊗ (H ⊗ I₂)ᵀ
//! ```
//!
//! and substituting `vec(D) = B·P + c` gives the kinetic equation
//! `i dP/dt = G·P + g` with `G = A·Q·B`, `g = A·Q·c`.

use alloc::string::String;
use alloc::vec::Vec;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{self, kron, rk4_step, ComplexMatrix, ComplexVector, C64};
use crate::probchannel::{check_channel_prob_constraints, AffineConstants, ChannelProbs};
use crate::state::ProbVector15;

pub const HERMITIAN_TOL: f64 = 1e-12;
/// Default integration step.
pub const DEFAULT_DT: f64 = 1e-3;
/// Per-step imaginary residue allowed before integration is aborted.
pub const STEP_IMAGINARY_TOL: f64 = 1e-9;
/// Constraint tolerance for the initial condition.
pub const INITIAL_CONSTRAINT_TOL: f64 = 1e-9;

/// A 2x2 Hermitian generator, with `ħ = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian {
    h: ComplexMatrix,
    label: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KineticGenerator {
    q: ComplexMatrix,
    g_mat: ComplexMatrix,
    g_vec: ComplexVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<(f64, ProbVector15)>,
    pub dt: f64,
    pub hamiltonian_label: String,
}

impl Hamiltonian {
    pub fn new(h: ComplexMatrix) -> Result<Self> {
        Self::with_label(h, "H")
    }

    pub fn with_label(h: ComplexMatrix, label: &str) -> Result<Self> {
        h.expect_dim(2)?;
        h.require_hermitian(HERMITIAN_TOL)?;
        Ok(Self { h, label: label.into() })
    }

    pub fn zero() -> Self {
        Self { h: ComplexMatrix::zeros(2, 2), label: "0".into() }
    }

    pub fn pauli_x() -> Self {
        Self { h: linalg::pauli_x(), label: "sigma_x".into() }
    }

    pub fn pauli_y() -> Self {
        Self { h: linalg::pauli_y(), label: "sigma_y".into() }
    }

    pub fn pauli_z() -> Self {
        Self { h: linalg::pauli_z(), label: "sigma_z".into() }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.h
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Generator of `i d vec(D)/dt = Q · vec(D)`.
pub fn build_q(h: &Hamiltonian) -> ComplexMatrix {
    let k = kron(&h.h, &ComplexMatrix::identity(2));
    let i4 = ComplexMatrix::identity(4);
    &kron(&k, &i4) - &kron(&i4, &k.transpose())
}

impl KineticGenerator {
    pub fn new(h: &Hamiltonian, consts: &AffineConstants) -> Self {
        let q = build_q(h);
        let aq = consts.to_probs() * &q;
        let g_mat = &aq * consts.to_choi();
        let g_vec = aq.matvec(consts.choi_offset());
        Self { q, g_mat, g_vec }
    }

    pub fn q(&self) -> &ComplexMatrix {
        &self.q
    }

    /// `G = A·Q·B`
    pub fn g_matrix(&self) -> &ComplexMatrix {
        &self.g_mat
    }

    /// `g = A·Q·c`
    pub fn g_vector(&self) -> &ComplexVector {
        &self.g_vec
    }

    /// `dP/dt = -i (G·P + g)`
    pub fn derivative(&self, p: &ComplexVector) -> ComplexVector {
        let rhs = &self.g_mat.matvec(p) + &self.g_vec;
        rhs.scale(C64::new(0.0, -1.0))
    }
}

pub fn build_generator(h: &Hamiltonian) -> KineticGenerator {
    KineticGenerator::new(h, &AffineConstants::new())
}

/// Step count and whether the last step is a shortened one.
fn time_grid(t_max: f64, dt: f64) -> Result<(usize, bool)> {
    if !(t_max.is_finite() && dt.is_finite() && t_max > 0.0 && dt > 0.0 && dt <= t_max) {
        return Err(Error::InvalidTimeGrid { t_max, dt });
    }
    let ratio = t_max / dt;
    let nearest = ratio.round();
    if (nearest * dt - t_max).abs() <= 1e-9 * t_max {
        Ok((nearest as usize, false))
    } else {
        Ok((ratio.floor() as usize, true))
    }
}

/// Integrates the kinetic equation with fixed-step RK4 from `p0` to `t_max`.
///
/// Samples are recorded at `t = 0`, after every step, and at `t_max`. The
/// state is projected back onto real vectors after each step once its
/// imaginary residue has been checked; no other correction is applied.
pub fn evolve_probs(h: &Hamiltonian, p0: &ChannelProbs, t_max: f64, dt: f64) -> Result<Trajectory> {
    evolve_probs_with(&AffineConstants::new(), h, p0, t_max, dt)
}

pub fn evolve_probs_with(
    consts: &AffineConstants,
    h: &Hamiltonian,
    p0: &ChannelProbs,
    t_max: f64,
    dt: f64,
) -> Result<Trajectory> {
    let (full_steps, partial) = time_grid(t_max, dt)?;
    let check = check_channel_prob_constraints(p0, INITIAL_CONSTRAINT_TOL);
    if !check.satisfied {
        return Err(Error::ConstraintViolation { residuals: check.residuals });
    }

    let generator = KineticGenerator::new(h, consts);
    let field = |_: f64, y: &ComplexVector| generator.derivative(y);

    let mut samples = Vec::with_capacity(full_steps + 2);
    samples.push((0.0, p0.0));
    let mut y = ComplexVector::from_real(p0.as_array());
    let mut t = 0.0;
    let total = full_steps + usize::from(partial);
    for step in 1..=total {
        let t_next = if step == total { t_max } else { step as f64 * dt };
        let next = rk4_step(field, &y, t, t_next - t);
        let residue = next.max_imag();
        if residue.is_nan() || residue > STEP_IMAGINARY_TOL {
            return Err(Error::ImaginaryResidue { residue });
        }
        let p = to_probs(&next);
        y = ComplexVector::from_real(&p.0);
        t = t_next;
        samples.push((t, p));
    }
    Ok(Trajectory { samples, dt, hamiltonian_label: h.label.clone() })
}

fn to_probs(y: &ComplexVector) -> ProbVector15 {
    let mut p = [0.0; 15];
    for (slot, z) in p.iter_mut().zip(y.iter()) {
        *slot = z.re;
    }
    ProbVector15(p)
}

/// Exact channel probabilities at time `t` from `D = vec(U) vec(U)†`.
pub fn oracle_probs(h: &Hamiltonian, t: f64) -> Result<ChannelProbs> {
    oracle_probs_with(&AffineConstants::new(), h, t)
}

pub fn oracle_probs_with(consts: &AffineConstants, h: &Hamiltonian, t: f64) -> Result<ChannelProbs> {
    consts.probs_from_choi(&oracle_choi(h, t)?)
}

/// `vec(U(t)) vec(U(t))†`
pub fn oracle_choi(h: &Hamiltonian, t: f64) -> Result<crate::channel::ChoiMatrix> {
    let u = linalg::unitary_exp(&h.h, t)?;
    let v = linalg::vec(&u)?;
    crate::channel::ChoiMatrix::new(v.outer(&v))
}

/// Largest ∞-norm distance between the trajectory and the oracle.
pub fn compare_to_oracle(h: &Hamiltonian, traj: &Trajectory) -> Result<f64> {
    let consts = AffineConstants::new();
    let mut worst = 0.0_f64;
    for (t, p) in &traj.samples {
        let exact = oracle_probs_with(&consts, h, *t)?;
        worst = worst.max(p.max_abs_diff(&exact.0));
    }
    Ok(worst)
}
