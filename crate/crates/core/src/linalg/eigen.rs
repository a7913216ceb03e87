use alloc::vec::Vec;
#[allow(unused_imports)] // shadowed by inherent methods whenever std is linked
use num_traits::Float;

use super::{ComplexMatrix, C64, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
const REL_OFF_DIAGONAL: f64 = 1e-14;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending and
/// eigenvectors stored as the matching columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEig {
    /// `V · diag(f(λ)) · V†`
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> C64) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        let weights: Vec<C64> = self.values.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |r, c| (0..n).map(|k| v[(r, k)] * weights[k] * v[(c, k)].conj()).sum())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|l| C64::new(l, 0.0))
    }

    pub fn min_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                sum += a[(r, c)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// The input must be Hermitian within `tol`; its Hermitian part is what gets
/// diagonalised. Sweeps continue until the off-diagonal Frobenius norm drops
/// below `1e-14 · ‖m‖`.
pub fn hermitian_eig(m: &ComplexMatrix, tol: f64) -> Result<HermitianEig> {
    m.require_hermitian(tol)?;
    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = REL_OFF_DIAGONAL * a.frobenius_norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEig { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p,q]`. The pivot phase is
/// removed first, then a real symmetric rotation finishes the job.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = (apq / mag).conj();
    let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * mag);
    let t = if tau >= 0.0 { 1.0 / (tau + (1.0 + tau * tau).sqrt()) } else { -1.0 / (-tau + (1.0 + tau * tau).sqrt()) };
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;
    // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]]
    let g00 = C64::new(cs, 0.0);
    let g01 = C64::new(sn, 0.0);
    let g10 = phase * -sn;
    let g11 = phase * cs;

    let n = a.rows();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * g00 + akq * g10;
        a[(k, q)] = akp * g01 + akq * g11;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = g00.conj() * apk + g10.conj() * aqk;
        a[(q, k)] = g01.conj() * apk + g11.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * g00 + vkq * g10;
        v[(k, q)] = vkp * g01 + vkq * g11;
    }
}

/// Real eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigvals(m: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    hermitian_eig(m, tol).map(|e| e.values)
}

/// `exp(-i·h·t)` for Hermitian `h`, built from its spectral decomposition.
pub fn unitary_exp(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(h, 1e-12)?;
    Ok(eig.reconstruct_with(|l| C64::from_polar(1.0, -l * t)))
}
