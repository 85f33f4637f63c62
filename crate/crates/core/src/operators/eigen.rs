//! Spectral decomposition of Hermitian operators.
//!
//! One route serves every downstream consumer (propagators, PSD roots,
//! spectra) so all tolerances trace back to the residuals verified here.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::hermitian::HermitianOperator;
use crate::operators::matrix::ComplexMatrix;
use crate::tolerances;

/// Ascending eigenvalues with an orthonormal eigenvector matrix, plus the
/// residuals measured at construction.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    eigenvalues: Vec<f64>,
    /// Columns are the eigenvectors, in eigenvalue order.
    eigenvectors: ComplexMatrix,
    reconstruction_residual: f64,
    orthonormality_residual: f64,
}

impl EigenSystem {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn reconstruction_residual(&self) -> f64 {
        self.reconstruction_residual
    }

    pub fn orthonormality_residual(&self) -> f64 {
        self.orthonormality_residual
    }

    /// `U diag(f(lambda)) U*` — the single spot where functions of an
    /// operator are synthesized from its spectrum.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let u = &self.eigenvectors;
        let mut scaled = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                scaled.set(i, k, u.get(i, k) * f(self.eigenvalues[k]));
            }
        }
        &scaled * &u.adjoint()
    }
}

/// Eigendecomposition with verified residuals.
///
/// Tridiagonalization plus implicitly shifted QL, capped at
/// `EIGEN_SWEEPS_PER_DIM * dim` sweeps. Eigenvalues come back ascending;
/// reconstruction and orthonormality residuals are measured on every call
/// and failure to meet them is an error, not a warning.
pub fn hermitian_eigendecomposition(a: &HermitianOperator) -> Result<EigenSystem> {
    let n = a.dim();
    let max_sweeps = tolerances::EIGEN_SWEEPS_PER_DIM * n;

    let m = DMatrix::from_fn(n, n, |i, j| a.entry(i, j));
    let decomp = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, max_sweeps).ok_or_else(
        || Error::EigenDidNotConverge {
            matrix: a.describe(),
            max_sweeps,
        },
    )?;

    // Ascending order, columns permuted alongside.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        decomp.eigenvalues[i]
            .partial_cmp(&decomp.eigenvalues[j])
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| decomp.eigenvalues[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, |i, j| decomp.eigenvectors[(i, order[j])]);

    let system = EigenSystem {
        eigenvalues,
        eigenvectors,
        reconstruction_residual: 0.0,
        orthonormality_residual: 0.0,
    };
    verify_residuals(a, system)
}

fn verify_residuals(a: &HermitianOperator, mut system: EigenSystem) -> Result<EigenSystem> {
    let n = a.dim();
    let u = &system.eigenvectors;

    let au = a.matrix() * u;
    let mut ulambda = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            ulambda.set(i, j, u.get(i, j) * system.eigenvalues[j]);
        }
    }
    let reconstruction = au.frobenius_distance(&ulambda);
    let a_norm = a.matrix().frobenius_norm();
    let allowed_reconstruction = tolerances::EIGEN_RECONSTRUCTION_REL * a_norm.max(f64::MIN_POSITIVE);
    if reconstruction > allowed_reconstruction {
        return Err(Error::ContractViolated {
            check: format!("eigendecomposition reconstruction for {}", a.describe()),
            measured: reconstruction,
            allowed: allowed_reconstruction,
        });
    }

    let gram = &u.adjoint() * u;
    let orthonormality = gram.identity_defect();
    if orthonormality > tolerances::ORTHONORMALITY {
        return Err(Error::ContractViolated {
            check: format!("eigenvector orthonormality for {}", a.describe()),
            measured: orthonormality,
            allowed: tolerances::ORTHONORMALITY,
        });
    }

    system.reconstruction_residual = reconstruction;
    system.orthonormality_residual = orthonormality;
    Ok(system)
}

/// Positive-semidefinite square root `R` with `R R ≈ A`.
///
/// Eigenvalues in `[-PSD_CLAMP_FLOOR, 0)` are clamped to zero (roundoff
/// from exactly PSD constructions); anything below the floor is an error
/// carrying the offending eigenvalue.
pub fn psd_sqrt(a: &HermitianOperator) -> Result<HermitianOperator> {
    let eigen = hermitian_eigendecomposition(a)?;
    let min = eigen.min_eigenvalue();
    if min < -tolerances::PSD_CLAMP_FLOOR {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: min,
            floor: tolerances::PSD_CLAMP_FLOOR,
        });
    }
    let raw = eigen.map_spectrum(|lambda| Complex64::new(lambda.max(0.0).sqrt(), 0.0));

    // Exact symmetrization scrubs the last-ulp asymmetry of U f(Λ) U*.
    let n = raw.dim();
    let mut sym = ComplexMatrix::zeros(n);
    for i in 0..n {
        sym.set(i, i, Complex64::new(raw.get(i, i).re, 0.0));
        for j in (i + 1)..n {
            let z = (raw.get(i, j) + raw.get(j, i).conj()).scale(0.5);
            sym.set(i, j, z);
            sym.set(j, i, z.conj());
        }
    }
    let root = HermitianOperator::new(sym)?;

    let residual = (root.matrix() * root.matrix()).frobenius_distance(a.matrix());
    let allowed = tolerances::PSD_SQRT_RESIDUAL_REL * (1.0 + a.matrix().frobenius_norm());
    if residual > allowed {
        return Err(Error::ContractViolated {
            check: format!("psd_sqrt reconstruction for {}", a.describe()),
            measured: residual,
            allowed,
        });
    }
    Ok(root)
}
