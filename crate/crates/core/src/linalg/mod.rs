//! Dense complex linear algebra for the small matrices used throughout the
//! crate: Kronecker products, row-major vectorisation, a Hermitian eigensolver,
//! the unitary propagator and a fixed-step RK4 integrator.

mod eigen;
mod matrix;
mod ode;

pub use eigen::{hermitian_eig, hermitian_eigvals, unitary_exp, HermitianEig};
pub use matrix::{kron, unvec, vec, ComplexMatrix, ComplexVector};
pub use ode::rk4_step;

pub type C64 = num_complex::Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, ONE], [ONE, ZERO]])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[[ONE, ZERO], [ZERO, -ONE]])
}

/// 4x4 swap operator `|ab> -> |ba>`.
pub fn swap4() -> ComplexMatrix {
    ComplexMatrix::from_fn(4, 4, |r, c| {
        let (a, b) = (r / 2, r % 2);
        if c == 2 * b + a {
            ONE
        } else {
            ZERO
        }
    })
}
