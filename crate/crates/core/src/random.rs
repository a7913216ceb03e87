//! Samplers for random states, channels and Hamiltonians. Used by the test
//! suites; any `rand::Rng` works.

use alloc::vec::Vec;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;
use rand::Rng;

use crate::channel::KrausSet;
use crate::kinetics::Hamiltonian;
use crate::linalg::{self, hermitian_eig, ComplexMatrix, C64};

/// Entries with real and imaginary parts uniform in `[-1, 1)`.
pub fn complex_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

pub fn hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    complex_matrix(rng, n, n).hermitian_part()
}

/// `G G† / Tr(G G†)` for a random square `G`; full rank almost surely.
pub fn density<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = complex_matrix(rng, n, n);
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    gg.scale(C64::new(1.0 / tr, 0.0)).hermitian_part()
}

/// Random Kraus set of `count` operators normalised to be trace preserving:
/// `A_k = M_k S^{-1/2}` with `S = Σ M_k† M_k`.
pub fn tp_kraus<R: Rng + ?Sized>(rng: &mut R, count: usize) -> KrausSet {
    let mut ops: Vec<ComplexMatrix> = (0..count).map(|_| complex_matrix(rng, 2, 2)).collect();
    // the second pass removes what the first leaves at roundoff level
    for _ in 0..2 {
        let s = ops.iter().fold(ComplexMatrix::zeros(2, 2), |acc, m| &acc + &(&m.adjoint() * m));
        let eig = hermitian_eig(&s.hermitian_part(), 0.0).expect("Hermitian by construction");
        let inv_sqrt = eig.reconstruct_with(|l| C64::new(1.0 / l.sqrt(), 0.0));
        ops = ops.iter().map(|m| m * &inv_sqrt).collect();
    }
    KrausSet::new(ops).expect("nonempty 2x2 set")
}

/// `h0 I + r (n·σ)` with `r` in `[0.5, 2.5]` and `|h0| <= 5 - r`, so the
/// spectral norm is at most 5 and the level splitting is at least 1.
pub fn hamiltonian<R: Rng + ?Sized>(rng: &mut R) -> Hamiltonian {
    let r: f64 = rng.gen_range(0.5..2.5);
    let h0: f64 = rng.gen_range(-(5.0 - r)..(5.0 - r));
    let (nx, ny, nz) = loop {
        let v: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 0.1 && norm <= 1.0 {
            break (v[0] / norm, v[1] / norm, v[2] / norm);
        }
    };
    let re = |x: f64| C64::new(x, 0.0);
    let sum = &(&(&linalg::pauli_x().scale(re(nx)) + &linalg::pauli_y().scale(re(ny)))
        + &linalg::pauli_z().scale(re(nz)))
        .scale(re(r))
        + &ComplexMatrix::identity(2).scale(re(h0));
    Hamiltonian::with_label(sum.hermitian_part(), "random").expect("Hermitian by construction")
}
