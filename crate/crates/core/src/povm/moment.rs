//! Moment operators of a binned POVM.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{ComplexMatrix, HermitianOperator};
use crate::povm::{Povm, PovmConstruction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentOrder {
    First,
    Second,
}

impl MomentOrder {
    fn exponent(self) -> i32 {
        match self {
            MomentOrder::First => 1,
            MomentOrder::Second => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentRule {
    /// `sum_j c_j^order F_j` with bin midpoints; generic, with an
    /// O(bin-width^2) bias.
    Midpoint,
    /// Analytic per-bin integrals of `t^order e^{i(n-m)t} / 2pi`; exact,
    /// but only defined for the phase POVM construction.
    ExactPhase,
}

/// Moment operator `∫ t^order dF(t)` under the chosen rule.
///
/// For `ExactPhase` of order one over the full period the result equals
/// the closed-form phase operator: diagonal `pi`, off-diagonal `1/(i(n-m))`.
pub fn povm_moment(povm: &Povm, order: MomentOrder, rule: MomentRule) -> Result<HermitianOperator> {
    match rule {
        MomentRule::Midpoint => {
            let dim = povm.dim();
            let mut acc = ComplexMatrix::zeros(dim);
            for (j, f) in povm.elements().iter().enumerate() {
                let c = povm.partition().midpoint(j).powi(order.exponent());
                acc = &acc + &f.matrix().scale(Complex64::new(c, 0.0));
            }
            HermitianOperator::new(acc)
        }
        MomentRule::ExactPhase => {
            let n_max = match povm.metadata() {
                PovmConstruction::PhaseOscillator { n_max } => *n_max,
                other => {
                    return Err(Error::MomentRuleMismatch(format!(
                        "exact_phase moments need a phase-POVM construction, got {other:?}"
                    )))
                }
            };
            let dim = n_max + 1;
            let mut acc = ComplexMatrix::zeros(dim);
            for j in 0..povm.bin_count() {
                let (a, b) = povm.partition().bin(j);
                for n in 0..dim {
                    let diag = match order {
                        MomentOrder::First => (b * b - a * a) / (2.0 * TAU),
                        MomentOrder::Second => (b * b * b - a * a * a) / (3.0 * TAU),
                    };
                    let z = acc.get(n, n) + Complex64::new(diag, 0.0);
                    acc.set(n, n, z);
                    for m in (n + 1)..dim {
                        let c = Complex64::new(0.0, n as f64 - m as f64);
                        let value = (antiderivative(order, b, c) - antiderivative(order, a, c))
                            / TAU;
                        acc.set(n, m, acc.get(n, m) + value);
                    }
                }
            }
            // Mirror the strict upper triangle so hermiticity is exact.
            for n in 0..dim {
                for m in (n + 1)..dim {
                    acc.set(m, n, acc.get(n, m).conj());
                }
            }
            HermitianOperator::new(acc)
        }
    }
}

/// Antiderivative of `t^order e^{c t}` at `t`, for `c != 0`.
fn antiderivative(order: MomentOrder, t: f64, c: Complex64) -> Complex64 {
    let e = (c * t).exp();
    match order {
        MomentOrder::First => e * (t / c - 1.0 / (c * c)),
        MomentOrder::Second => e * (t * t / c - 2.0 * t / (c * c) + 2.0 / (c * c * c)),
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::models::build_phase_operator;
    use crate::povm::{build_phase_povm, OutcomePartition, Povm, PovmConstruction};

    #[test]
    fn exact_first_moment_matches_the_phase_operator() {
        let partition = OutcomePartition::uniform(0.0, TAU, 16).unwrap();
        let povm = build_phase_povm(16, &partition).unwrap();
        let moment = povm_moment(&povm, MomentOrder::First, MomentRule::ExactPhase).unwrap();
        let phase = build_phase_operator(16).unwrap();
        assert!(
            moment
                .matrix()
                .frobenius_distance(phase.time_operator.matrix())
                <= 1e-12
        );
    }

    #[test]
    fn midpoint_of_a_single_bin_is_pi_identity() {
        let partition = OutcomePartition::uniform(0.0, TAU, 1).unwrap();
        let id = HermitianOperator::from_diagonal(&[1.0; 4]).unwrap();
        let povm = Povm::new(
            partition,
            vec![id],
            PovmConstruction::Custom {
                description: "trivial".into(),
            },
        )
        .unwrap();
        let moment = povm_moment(&povm, MomentOrder::First, MomentRule::Midpoint).unwrap();
        for k in 0..4 {
            assert_abs_diff_eq!(moment.entry(k, k).re, PI, epsilon = 1e-15);
        }
    }

    #[test]
    fn exact_second_moment_diagonal_is_four_pi_squared_thirds() {
        let partition = OutcomePartition::uniform(0.0, TAU, 32).unwrap();
        let povm = build_phase_povm(8, &partition).unwrap();
        let moment = povm_moment(&povm, MomentOrder::Second, MomentRule::ExactPhase).unwrap();
        let expected = 4.0 * PI * PI / 3.0;
        for k in 0..povm.dim() {
            assert_abs_diff_eq!(moment.entry(k, k).re, expected, epsilon = 1e-12);
        }
    }

    #[test]
    fn exact_rule_rejects_non_phase_constructions() {
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
        assert!(matches!(
            povm_moment(&povm, MomentOrder::First, MomentRule::ExactPhase),
            Err(Error::MomentRuleMismatch(_))
        ));
    }
}
