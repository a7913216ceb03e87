use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entry count {found} does not match shape {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, found: usize },

    #[error("non-finite entry in input")]
    NonFinite,

    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("trace is {trace}, expected {expected}")]
    WrongTrace { trace: f64, expected: f64 },

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("probability p{index} = {value} lies outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("p1 + p2 + p3 = {sum} is below 2, the 4-outcome distribution would be negative")]
    NegativeDistribution { sum: f64 },

    #[error("direction is not a unit vector (norm {norm})")]
    NotUnitDirection { norm: f64 },

    #[error("empty Kraus set")]
    EmptyKrausSet,

    #[error("map is not completely positive (min eigenvalue {min_eigenvalue:e})")]
    NotCompletelyPositive { min_eigenvalue: f64 },

    #[error("imaginary residue {residue:e} exceeds threshold")]
    ImaginaryResidue { residue: f64 },

    #[error("channel probability constraints violated (residuals {residuals:?})")]
    ConstraintViolation { residuals: [f64; 3] },

    #[error("invalid time grid: t_max = {t_max}, dt = {dt}")]
    InvalidTimeGrid { t_max: f64, dt: f64 },
}
