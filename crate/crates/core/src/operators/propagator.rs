//! Unitary one-parameter groups `e^{i theta A}`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::eigen::hermitian_eigendecomposition;
use crate::operators::hermitian::HermitianOperator;
use crate::operators::matrix::ComplexMatrix;
use crate::tolerances;

/// `e^{i theta A}` for Hermitian `A`, with its provenance attached.
#[derive(Debug, Clone, Serialize)]
pub struct UnitaryPropagator {
    matrix: ComplexMatrix,
    generator_ref: String,
    parameter: f64,
}

impl UnitaryPropagator {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn generator_ref(&self) -> &str {
        &self.generator_ref
    }

    pub fn parameter(&self) -> f64 {
        self.parameter
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.matrix.matvec(v)
    }
}

/// `e^{i theta A}` via the spectral decomposition `U diag(e^{i theta lambda}) U*`.
///
/// `theta = 0` returns the identity exactly, which makes the zero-parameter
/// residual identities downstream hold bit-for-bit.
pub fn unitary_exponential(a: &HermitianOperator, theta: f64) -> Result<UnitaryPropagator> {
    if !theta.is_finite() {
        return Err(Error::InvalidInput(format!(
            "propagator parameter must be finite, got {theta}"
        )));
    }
    let matrix = if theta == 0.0 {
        ComplexMatrix::identity(a.dim())
    } else {
        let eigen = hermitian_eigendecomposition(a)?;
        let m = eigen.map_spectrum(|lambda| Complex64::from_polar(1.0, theta * lambda));
        let defect = (&m.adjoint() * &m).identity_defect();
        if defect > tolerances::ORTHONORMALITY {
            return Err(Error::ContractViolated {
                check: format!("propagator unitarity for {}", a.describe()),
                measured: defect,
                allowed: tolerances::ORTHONORMALITY,
            });
        }
        m
    };
    Ok(UnitaryPropagator {
        matrix,
        generator_ref: a.describe(),
        parameter: theta,
    })
}
