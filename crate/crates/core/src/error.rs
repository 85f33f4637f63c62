//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("matrix entry ({row}, {col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not Hermitian: defect {defect:.3e} exceeds allowed {allowed:.3e}")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("eigensolver did not converge for {matrix} within {max_sweeps} sweeps")]
    EigenDidNotConverge { matrix: String, max_sweeps: usize },

    #[error("not positive semidefinite: min eigenvalue {min_eigenvalue:.6e} is below -{floor:.1e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64, floor: f64 },

    /// A numerical contract (eigen residual, unitarity, square-root
    /// reconstruction, isometry defect) came out above tolerance.
    #[error("{check} violated: measured {measured:.3e}, allowed {allowed:.3e}")]
    ContractViolated {
        check: String,
        measured: f64,
        allowed: f64,
    },

    #[error("spectrum is not strictly increasing at index {index}")]
    NonMonotoneSpectrum { index: usize },

    #[error("harmonic frequency must be positive, got {omega}")]
    NonPositiveOmega { omega: f64 },

    #[error("quasi-degenerate spectrum: min gap {min_gap:.3e} is below {floor:.1e}")]
    QuasiDegenerateSpectrum { min_gap: f64, floor: f64 },

    #[error("momentum grid: {0}")]
    InvalidGrid(String),

    #[error("outcome partition: {0}")]
    InvalidPartition(String),

    #[error("POVM: {0}")]
    InvalidPovm(String),

    #[error("moment rule mismatch: {0}")]
    MomentRuleMismatch(String),

    #[error("state vector: {0}")]
    InvalidState(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures of numerical machinery (as opposed to rejected
    /// inputs); the CLI maps these to a distinct exit status.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::EigenDidNotConverge { .. }
                | Error::NotPositiveSemidefinite { .. }
                | Error::ContractViolated { .. }
        )
    }
}
