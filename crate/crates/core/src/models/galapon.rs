//! Time operators of discrete Hamiltonian spectra.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::pair::{ModelKind, ModelPair};
use crate::models::spectrum::DiscreteSpectrum;
use crate::operators::{ComplexMatrix, HermitianOperator};
use crate::tolerances;

/// Galapon operator of a discrete spectrum: `T_nm = i / (E_n - E_m)` off
/// the diagonal, zero on it. Satisfies `[T, H] (e_k - e_l) = i (e_k - e_l)`
/// exactly at every truncation.
pub fn build_galapon(spectrum: &DiscreteSpectrum) -> Result<ModelPair> {
    if spectrum.min_gap() < tolerances::QUASI_DEGENERATE_GAP {
        return Err(Error::QuasiDegenerateSpectrum {
            min_gap: spectrum.min_gap(),
            floor: tolerances::QUASI_DEGENERATE_GAP,
        });
    }
    let energies = spectrum.eigenvalues();
    let n = energies.len();
    let t = ComplexMatrix::from_fn(n, |row, col| {
        if row == col {
            Complex64::ZERO
        } else {
            // i / (E_row - E_col), purely imaginary.
            Complex64::new(0.0, 1.0 / (energies[row] - energies[col]))
        }
    });
    let time_operator = HermitianOperator::new(t)?;
    let hamiltonian = HermitianOperator::from_diagonal(energies)?;
    ModelPair::new(
        hamiltonian,
        time_operator,
        ModelKind::Galapon,
        Vec::new(),
        "CCR with coefficient +i on span{e_k - e_l | k != l}",
    )
}

/// Oscillator phase operator: diagonal `pi`, off-diagonal `1/(i(n-m))`,
/// paired with `H = diag(n + 1/2)`. Equal to `pi I - T_galapon(omega = 1)`
/// elementwise.
pub fn build_phase_operator(n_max: usize) -> Result<ModelPair> {
    if n_max < 1 {
        return Err(Error::InvalidInput("phase operator needs n_max >= 1".into()));
    }
    let dim = n_max + 1;
    let t = ComplexMatrix::from_fn(dim, |n, m| {
        if n == m {
            Complex64::new(PI, 0.0)
        } else {
            // 1 / (i (n - m)) = -i / (n - m)
            Complex64::new(0.0, -1.0 / (n as f64 - m as f64))
        }
    });
    let time_operator = HermitianOperator::new(t)?;
    let energies: Vec<f64> = (0..dim).map(|n| n as f64 + 0.5).collect();
    let hamiltonian = HermitianOperator::from_diagonal(&energies)?;
    ModelPair::new(
        hamiltonian,
        time_operator,
        ModelKind::Phase,
        vec![
            "equals pi*I - T_galapon(omega=1); CCR coefficient on difference vectors is -i"
                .into(),
        ],
        "CCR with coefficient -i on span{e_k - e_l | k != l}",
    )
}
