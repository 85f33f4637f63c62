//! Naimark dilation of a binned POVM to a projective measure.
//!
//! The concrete construction stacks the PSD square roots of the bin
//! elements into an isometry `V = [sqrt(F_1); ...; sqrt(F_K)]`; the
//! projective elements are the block selectors of the dilation space, and
//! compression recovers each bin: `V* E_j V = F_j`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{psd_sqrt, ComplexMatrix, RectMatrix};
use crate::povm::{povm_axioms_check, Povm};
use crate::tolerances;

#[derive(Debug, Clone, Serialize)]
pub struct NaimarkDilation {
    /// `(dim * K) x dim` isometry.
    isometry: RectMatrix,
    /// Mutually orthogonal projectors summing to the dilation identity.
    projective_elements: Vec<ComplexMatrix>,
    /// `|V* E_j V - F_j|_F` per bin.
    reconstruction_errors: Vec<f64>,
}

impl NaimarkDilation {
    pub fn isometry(&self) -> &RectMatrix {
        &self.isometry
    }

    pub fn projective_elements(&self) -> &[ComplexMatrix] {
        &self.projective_elements
    }

    pub fn reconstruction_errors(&self) -> &[f64] {
        &self.reconstruction_errors
    }

    pub fn max_reconstruction_error(&self) -> f64 {
        self.reconstruction_errors
            .iter()
            .copied()
            .fold(0.0, f64::max)
    }

    pub fn dilation_dim(&self) -> usize {
        self.isometry.rows()
    }

    /// `|V* V - I|_F`.
    pub fn isometry_defect(&self) -> f64 {
        let v = &self.isometry;
        v.adjoint().mul(v).into_square().map_or(f64::INFINITY, |g| g.identity_defect())
    }
}

pub fn naimark_dilate(povm: &Povm) -> Result<NaimarkDilation> {
    let axioms = povm_axioms_check(povm)?;
    if !axioms.passed {
        return Err(Error::InvalidPovm(format!(
            "axioms check failed before dilation: {}",
            axioms.summary_line()
        )));
    }

    let dim = povm.dim();
    let bins = povm.bin_count();
    let dilation_dim = dim * bins;

    let mut isometry = RectMatrix::zeros(dilation_dim, dim);
    for (j, f) in povm.elements().iter().enumerate() {
        let root = psd_sqrt(f)?;
        for r in 0..dim {
            for c in 0..dim {
                isometry.set(j * dim + r, c, root.entry(r, c));
            }
        }
    }

    let gram = isometry.adjoint().mul(&isometry).into_square()?;
    let isometry_defect = gram.identity_defect();
    if isometry_defect > tolerances::EXACT_IDENTITY {
        return Err(Error::ContractViolated {
            check: "Naimark isometry V*V = I".into(),
            measured: isometry_defect,
            allowed: tolerances::EXACT_IDENTITY,
        });
    }

    let mut projective_elements = Vec::with_capacity(bins);
    for j in 0..bins {
        let mut e = ComplexMatrix::zeros(dilation_dim);
        for r in 0..dim {
            e.set(j * dim + r, j * dim + r, Complex64::ONE);
        }
        projective_elements.push(e);
    }

    let v_adj = isometry.adjoint();
    let mut reconstruction_errors = Vec::with_capacity(bins);
    for (j, f) in povm.elements().iter().enumerate() {
        let ev = RectMatrix::from_square(&projective_elements[j]).mul(&isometry);
        let compressed = v_adj.mul(&ev).into_square()?;
        reconstruction_errors.push(compressed.frobenius_distance(f.matrix()));
    }
    let max_error = reconstruction_errors.iter().copied().fold(0.0, f64::max);
    if max_error > tolerances::DILATION_RECONSTRUCTION {
        return Err(Error::ContractViolated {
            check: "Naimark compression V* E_j V = F_j".into(),
            measured: max_error,
            allowed: tolerances::DILATION_RECONSTRUCTION,
        });
    }

    Ok(NaimarkDilation {
        isometry,
        projective_elements,
        reconstruction_errors,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::TAU;

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::operators::HermitianOperator;
    use crate::povm::{build_phase_povm, OutcomePartition, PovmConstruction};

    #[test]
    fn single_bin_identity_povm_dilates_trivially() {
        let partition = OutcomePartition::uniform(0.0, TAU, 1).unwrap();
        let id = HermitianOperator::from_diagonal(&[1.0; 3]).unwrap();
        let povm = Povm::new(
            partition,
            vec![id],
            PovmConstruction::Custom {
                description: "identity".into(),
            },
        )
        .unwrap();
        let dilation = naimark_dilate(&povm).unwrap();
        assert_eq!(dilation.dilation_dim(), 3);
        assert!(dilation.max_reconstruction_error() <= 1e-14);
        assert!(dilation.isometry_defect() <= 1e-14);
    }

    #[test]
    fn half_identity_povm_has_the_closed_form_dilation() {
        let partition = OutcomePartition::uniform(0.0, TAU, 2).unwrap();
        let half = HermitianOperator::from_diagonal(&[0.5; 2]).unwrap();
        let povm = Povm::new(
            partition,
            vec![half.clone(), half],
            PovmConstruction::Custom {
                description: "identity halves".into(),
            },
        )
        .unwrap();
        let dilation = naimark_dilate(&povm).unwrap();
        let sqrt_half = 0.5f64.sqrt();
        for j in 0..2 {
            for r in 0..2 {
                for c in 0..2 {
                    let z = dilation.isometry().get(j * 2 + r, c);
                    let expected = if r == c { sqrt_half } else { 0.0 };
                    assert_abs_diff_eq!(z.re, expected, epsilon = 1e-15);
                    assert_abs_diff_eq!(z.im, 0.0, epsilon = 1e-15);
                }
            }
        }
        assert!(dilation.isometry_defect() <= 1e-15);
        assert!(dilation.max_reconstruction_error() <= 1e-15);
    }

    #[test]
    fn phase_povm_dilation_meets_its_contracts() {
        let partition = OutcomePartition::uniform(0.0, TAU, 16).unwrap();
        let povm = build_phase_povm(16, &partition).unwrap();
        let dilation = naimark_dilate(&povm).unwrap();
        assert!(dilation.isometry_defect() <= tolerances::EXACT_IDENTITY);
        assert!(dilation.max_reconstruction_error() <= tolerances::DILATION_RECONSTRUCTION);

        // E_j are mutually orthogonal projectors summing to the identity.
        let k = povm.bin_count();
        let nd = dilation.dilation_dim();
        let mut sum = ComplexMatrix::zeros(nd);
        for j in 0..k {
            let e = &dilation.projective_elements()[j];
            assert!((e * e).frobenius_distance(e) == 0.0);
            sum = &sum + e;
        }
        assert!(sum.identity_defect() == 0.0);
        let e0 = &dilation.projective_elements()[0];
        let e1 = &dilation.projective_elements()[1];
        assert!((e0 * e1).frobenius_norm() == 0.0);
    }

    #[test]
    fn non_psd_bin_fails_dilation() {
        let partition = OutcomePartition::uniform(0.0, TAU, 2).unwrap();
        let good = HermitianOperator::from_diagonal(&[1.0, 1.0 + 1e-3]).unwrap();
        let bad = HermitianOperator::from_diagonal(&[0.0, -1e-3]).unwrap();
        let povm = Povm::new(
            partition,
            vec![good, bad],
            PovmConstruction::Custom {
                description: "signed split".into(),
            },
        )
        .unwrap();
        // The axioms gate already rejects it; the psd_sqrt path would too.
        assert!(naimark_dilate(&povm).is_err());
    }
}
