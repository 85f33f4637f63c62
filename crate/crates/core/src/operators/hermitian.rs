//! Hermiticity-checked operator type.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::matrix::ComplexMatrix;
use crate::operators::vector;
use crate::tolerances;

/// A complex square matrix verified Hermitian at construction.
///
/// The common currency for Hamiltonians, time operators, position and
/// momentum operators, and POVM elements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
    hermiticity_defect: f64,
}

impl HermitianOperator {
    /// Accepts `matrix` when `max |A_ij - conj(A_ji)|` is within
    /// `HERMITICITY_REL * (1 + max-entry-magnitude)`.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        matrix.check_finite()?;
        let defect = matrix.hermiticity_defect();
        let allowed = tolerances::HERMITICITY_REL * (1.0 + matrix.max_abs_entry());
        if defect > allowed {
            return Err(Error::NotHermitian { defect, allowed });
        }
        Ok(Self {
            matrix,
            hermiticity_defect: defect,
        })
    }

    /// Real diagonal matrices are Hermitian with zero defect.
    pub fn from_diagonal(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry { row: bad, col: bad });
        }
        Ok(Self {
            matrix: ComplexMatrix::diagonal(values),
            hermiticity_defect: 0.0,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.hermiticity_defect
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix.get(row, col)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.matrix.matvec(v)
    }

    /// `<v, A v>`; real up to roundoff for Hermitian `A`.
    pub fn expectation(&self, v: &[Complex64]) -> f64 {
        vector::inner(v, &self.apply(v)).re
    }

    /// Variance `<A^2> - <A>^2` on a unit vector, clamped at zero.
    /// `<A^2>` is computed as `|A v|^2`, valid because `A = A*`.
    pub fn variance(&self, v: &[Complex64]) -> f64 {
        let av = self.apply(v);
        let mean = vector::inner(v, &av).re;
        let second = av.iter().map(|z| z.norm_sqr()).sum::<f64>();
        (second - mean * mean).max(0.0)
    }

    /// Short human-readable tag for diagnostics.
    pub fn describe(&self) -> String {
        format!(
            "{n}x{n} Hermitian (max |entry| = {m:.3e})",
            n = self.dim(),
            m = self.matrix.max_abs_entry()
        )
    }
}

/// `A B - B A`, exactly as computed in working precision.
///
/// Anti-Hermitian up to roundoff for Hermitian inputs, and satisfies
/// `commutator(A, B) = -commutator(B, A)` exactly.
pub fn commutator(a: &HermitianOperator, b: &HermitianOperator) -> Result<ComplexMatrix> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ab = a.matrix() * b.matrix();
    let ba = b.matrix() * a.matrix();
    Ok(&ab - &ba)
}

/// `[A, B] v` via matrix-vector products only; cheaper and slightly more
/// accurate than forming the commutator matrix.
pub fn commutator_apply(
    a: &HermitianOperator,
    b: &HermitianOperator,
    v: &[Complex64],
) -> Result<Vec<Complex64>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if v.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: v.len(),
        });
    }
    let abv = a.apply(&b.apply(v));
    let bav = b.apply(&a.apply(v));
    Ok(vector::sub(&abv, &bav))
}
