//! POVM axiom verification: completeness, hermiticity, positivity.

use crate::error::Result;
use crate::operators::{hermitian_eigendecomposition, ComplexMatrix};
use crate::povm::Povm;
use crate::tolerances;
use crate::verify::report::{ResidualReport, ResidualValue};

/// Measures the three defining properties of a POVM on a structurally
/// valid input and reports them against the standard tolerances:
/// `|sum F_j - I|_F <= 1e-12`, max hermiticity defect `<= 1e-12`, min bin
/// eigenvalue `>= -1e-10`.
pub fn povm_axioms_check(povm: &Povm) -> Result<ResidualReport> {
    let dim = povm.dim();

    let mut sum = ComplexMatrix::zeros(dim);
    let mut max_hermiticity = 0.0f64;
    let mut min_eigenvalue = f64::INFINITY;
    for f in povm.elements() {
        sum = &sum + f.matrix();
        max_hermiticity = max_hermiticity.max(f.matrix().hermiticity_defect());
        let eigen = hermitian_eigendecomposition(f)?;
        min_eigenvalue = min_eigenvalue.min(eigen.min_eigenvalue());
    }
    let completeness_defect = sum.identity_defect();
    let positivity_violation = (-min_eigenvalue).max(0.0);

    let values = vec![
        ResidualValue::gated(
            "completeness_defect",
            completeness_defect,
            tolerances::EXACT_IDENTITY,
        ),
        ResidualValue::gated(
            "max_hermiticity_defect",
            max_hermiticity,
            tolerances::EXACT_IDENTITY,
        ),
        ResidualValue::gated(
            "positivity_violation",
            positivity_violation,
            tolerances::PSD_CLAMP_FLOOR,
        ),
        ResidualValue::informational("min_bin_eigenvalue", min_eigenvalue),
    ];
    Ok(ResidualReport::new(
        "povm_axioms",
        values,
        Vec::new(),
        format!(
            "{:?}, {} bins, dim {}",
            povm.metadata(),
            povm.bin_count(),
            dim
        ),
    ))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::TAU;

    use num_complex::Complex64;

    use super::*;
    use crate::operators::HermitianOperator;
    use crate::povm::{build_phase_povm, OutcomePartition, Povm, PovmConstruction};

    #[test]
    fn phase_povm_passes_all_axioms() {
        let partition = OutcomePartition::uniform(0.0, TAU, 64).unwrap();
        let povm = build_phase_povm(32, &partition).unwrap();
        let report = povm_axioms_check(&povm).unwrap();
        assert!(report.passed, "{}", report.summary_line());
    }

    #[test]
    fn perturbed_element_fails_completeness() {
        let partition = OutcomePartition::uniform(0.0, TAU, 8).unwrap();
        let povm = build_phase_povm(8, &partition).unwrap();
        let mut elements: Vec<HermitianOperator> = povm.elements().to_vec();
        let mut m = elements[0].matrix().clone();
        let z = m.get(0, 0) + Complex64::new(-2e-10, 0.0);
        m.set(0, 0, z);
        elements[0] = HermitianOperator::new(m).unwrap();
        let perturbed = Povm::new(
            povm.partition().clone(),
            elements,
            PovmConstruction::Custom {
                description: "perturbed phase POVM".into(),
            },
        )
        .unwrap();
        let report = povm_axioms_check(&perturbed).unwrap();
        assert!(!report.passed);
        let completeness = &report.values[0];
        assert_eq!(completeness.name, "completeness_defect");
        assert!(!completeness.passed);
    }

    #[test]
    fn identity_split_in_half_is_a_povm() {
        let half = HermitianOperator::from_diagonal(&[0.5; 3]).unwrap();
        let partition = OutcomePartition::uniform(0.0, 1.0, 2).unwrap();
        let povm = Povm::new(
            partition,
            vec![half.clone(), half],
            PovmConstruction::Custom {
                description: "identity halves".into(),
            },
        )
        .unwrap();
        let report = povm_axioms_check(&povm).unwrap();
        assert!(report.passed);
    }
}
