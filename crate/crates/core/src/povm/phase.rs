//! The oscillator phase POVM with exact closed-form bin integrals.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operators::{ComplexMatrix, HermitianOperator};
use crate::povm::{OutcomePartition, Povm, PovmConstruction};

/// Phase POVM over `[0, 2pi]` in the number basis `|0..n_max>`.
///
/// The bin `[a, b]` receives the element
/// `F_nm = (e^{i(n-m)b} - e^{i(n-m)a}) / (2 pi i (n-m))` off the diagonal
/// and `(b - a) / 2pi` on it — exact antiderivatives, no quadrature. The
/// elements telescope across shared edges, so any partition sums to the
/// identity.
pub fn build_phase_povm(n_max: usize, partition: &OutcomePartition) -> Result<Povm> {
    if n_max < 1 {
        return Err(Error::InvalidInput("phase POVM needs n_max >= 1".into()));
    }
    let (lo, hi) = partition.interval();
    if lo != 0.0 || hi != TAU {
        return Err(Error::InvalidPartition(format!(
            "phase POVM needs the outcome interval [0, 2pi], got [{lo}, {hi}]"
        )));
    }
    let dim = n_max + 1;
    let mut elements = Vec::with_capacity(partition.bin_count());
    for j in 0..partition.bin_count() {
        let (a, b) = partition.bin(j);
        let mut f = ComplexMatrix::zeros(dim);
        for n in 0..dim {
            f.set(n, n, Complex64::new((b - a) / TAU, 0.0));
            for m in (n + 1)..dim {
                let delta = n as f64 - m as f64;
                let c = Complex64::new(0.0, delta);
                let value = ((c * b).exp() - (c * a).exp()) / (c * TAU);
                f.set(n, m, value);
                f.set(m, n, value.conj());
            }
        }
        elements.push(HermitianOperator::new(f)?);
    }
    Povm::new(
        partition.clone(),
        elements,
        PovmConstruction::PhaseOscillator { n_max },
    )
}
