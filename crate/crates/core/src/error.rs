use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains a non-finite entry")]
    NonFinite,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported matrix dimension {0} (must be 2, 3 or 4)")]
    UnsupportedDimension(usize),
    #[error("eigensolver input is not Hermitian: max |H - H†| = {deviation:e} (tolerance 1e-10)")]
    NonHermitianInput { deviation: f64 },
    #[error(
        "Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error(
        "matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e} (tolerance -1e-10)"
    )]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("{name} = {value} is outside [{min}, {max}]")]
    AngleOutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error(
        "correlation triple lies outside the tetrahedron: Bell-basis eigenvalue {eigenvalue:e}"
    )]
    OutsideTetrahedron { eigenvalue: f64 },
    #[error("probability p = {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("state is not Hermitian: max |ρ - ρ†| = {deviation:e} (tolerance 1e-10)")]
    NotHermitian { deviation: f64 },
    #[error("state trace is {trace} (|tr - 1| tolerance 1e-10)")]
    TraceNotOne { trace: f64 },
    #[error("state is not positive: min eigenvalue {min_eigenvalue:e} (tolerance -1e-10)")]
    NotPositive { min_eigenvalue: f64 },
    #[error("Pauli trace has imaginary part {imag:e} (tolerance 1e-10)")]
    NonRealTrace { imag: f64 },

    #[error("acceleration must be non-negative, got {0}")]
    NegativeAcceleration(f64),
    #[error("r = {r} is outside [0, {max}]")]
    ROutOfRange { r: f64, max: f64 },
    #[error("cos r = {0} is outside [0, 1]")]
    CosROutOfRange(f64),
    #[error("damping parameter gamma = {0} is outside [0, 1]")]
    GammaOutOfRange(f64),
    #[error("Kraus set is not complete: max |ΣK†K - I| = {defect:e} (tolerance 1e-10)")]
    IncompleteKrausSet { defect: f64 },
    #[error("Kraus operators must be 2x2, got {0}x{0}")]
    KrausDimension(usize),

    #[error("closed-form radicand is negative: {value:e}")]
    NegativeRadicand { value: f64 },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
    #[error("csv: {0}")]
    Csv(String),
}
