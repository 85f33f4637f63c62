//! Canonical-commutation-relation residuals with signed-coefficient
//! detection.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::ModelPair;
use crate::operators::{commutator_apply, vector, HermitianOperator};
use crate::tolerances;
use crate::verify::report::{ResidualReport, ResidualValue};

/// `(r_plus, r_minus) = (|[T,H]v - iv|, |[T,H]v + iv|)` for one vector.
pub fn ccr_residuals(
    time_operator: &HermitianOperator,
    hamiltonian: &HermitianOperator,
    v: &[Complex64],
) -> Result<(f64, f64)> {
    let norm = vector::norm(v);
    if (norm - 1.0).abs() > tolerances::STATE_NORM_SLACK {
        return Err(Error::InvalidState(format!(
            "CCR probe vector must be normalized, got |v| = {norm}"
        )));
    }
    let w = commutator_apply(time_operator, hamiltonian, v)?;
    let iv = vector::scale(v, Complex64::I);
    let r_plus = vector::distance(&w, &iv);
    let r_minus = {
        let neg_iv = vector::scale(v, -Complex64::I);
        vector::distance(&w, &neg_iv)
    };
    Ok((r_plus, r_minus))
}

/// Measures `[T, H] v` against both `+i v` and `-i v` on every probe
/// vector; gates `min(r_plus, r_minus)` against `tolerance` and records
/// the better-matching signed coefficient per vector.
pub fn ccr_report(
    pair: &ModelPair,
    vectors: &[Vec<Complex64>],
    tolerance: f64,
) -> Result<ResidualReport> {
    if vectors.is_empty() {
        return Err(Error::InvalidInput("no probe vectors given".into()));
    }
    let mut values = Vec::with_capacity(3 * vectors.len());
    for (idx, v) in vectors.iter().enumerate() {
        let (r_plus, r_minus) = ccr_residuals(&pair.time_operator, &pair.hamiltonian, v)?;
        let sign = if r_plus <= r_minus { "+i" } else { "-i" };
        values.push(ResidualValue::gated(
            format!("vector {idx} best (coefficient {sign})"),
            r_plus.min(r_minus),
            tolerance,
        ));
        values.push(ResidualValue::informational(
            format!("vector {idx} r_plus"),
            r_plus,
        ));
        values.push(ResidualValue::informational(
            format!("vector {idx} r_minus"),
            r_minus,
        ));
    }
    Ok(ResidualReport::new(
        "ccr_residual",
        values,
        pair.conventions.clone(),
        format!(
            "{} pair, dim {}, {} vectors; {}",
            pair.kind.name(),
            pair.dim(),
            vectors.len(),
            pair.domain_note
        ),
    ))
}
