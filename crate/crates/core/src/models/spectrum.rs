//! Discrete Hamiltonian spectra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::HermitianOperator;
use crate::tolerances;

/// Descriptor accepted by [`build_discrete_hamiltonian`].
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSpec {
    /// `E_n = omega (n + 1/2)` for `n = 0..=levels`.
    Harmonic { omega: f64, levels: usize },
    /// Explicit strictly increasing eigenvalue list.
    Explicit { eigenvalues: Vec<f64> },
}

/// Strictly increasing eigenvalue sequence with gap and summability
/// metadata; the input to the Galapon construction.
#[derive(Debug, Clone, Serialize)]
pub struct DiscreteSpectrum {
    eigenvalues: Vec<f64>,
    omega: Option<f64>,
    min_gap: f64,
    /// Partial sum of `1/E_n^2` over the truncation.
    summability_estimate: f64,
    /// Set when the partial sums of `1/E_n^2` are still growing by more
    /// than one percent over the last quartile of indices. A finite
    /// truncation cannot decide convergence, so this is a warning, never
    /// an error.
    tail_growing: bool,
}

impl DiscreteSpectrum {
    pub fn harmonic(omega: f64, levels: usize) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::NonPositiveOmega { omega });
        }
        if levels < 1 {
            return Err(Error::InvalidInput(
                "harmonic spectrum needs at least levels = 1 (two eigenvalues)".into(),
            ));
        }
        let eigenvalues: Vec<f64> = (0..=levels).map(|n| omega * (n as f64 + 0.5)).collect();
        Self::from_values(eigenvalues, Some(omega))
    }

    pub fn explicit(eigenvalues: Vec<f64>) -> Result<Self> {
        Self::from_values(eigenvalues, None)
    }

    fn from_values(eigenvalues: Vec<f64>, omega: Option<f64>) -> Result<Self> {
        if eigenvalues.len() < 2 {
            return Err(Error::InvalidInput(
                "spectrum needs at least two eigenvalues".into(),
            ));
        }
        for (i, &e) in eigenvalues.iter().enumerate() {
            if !e.is_finite() {
                return Err(Error::NonFiniteEntry { row: i, col: i });
            }
        }
        let mut min_gap = f64::INFINITY;
        for i in 1..eigenvalues.len() {
            let gap = eigenvalues[i] - eigenvalues[i - 1];
            if gap <= 0.0 {
                return Err(Error::NonMonotoneSpectrum { index: i });
            }
            min_gap = min_gap.min(gap);
        }

        let (summability_estimate, tail_growing) = summability_trend(&eigenvalues);
        Ok(Self {
            eigenvalues,
            omega,
            min_gap,
            summability_estimate,
            tail_growing,
        })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Number of eigenvalues (the matrix dimension of the diagonal H).
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn omega(&self) -> Option<f64> {
        self.omega
    }

    pub fn min_gap(&self) -> f64 {
        self.min_gap
    }

    pub fn summability_estimate(&self) -> f64 {
        self.summability_estimate
    }

    pub fn tail_growing(&self) -> bool {
        self.tail_growing
    }
}

fn summability_trend(eigenvalues: &[f64]) -> (f64, bool) {
    let mut partials = Vec::with_capacity(eigenvalues.len());
    let mut acc = 0.0f64;
    let mut singular = false;
    for &e in eigenvalues {
        if e == 0.0 {
            singular = true;
        } else {
            acc += 1.0 / (e * e);
        }
        partials.push(acc);
    }
    if singular {
        return (f64::INFINITY, true);
    }
    let total = *partials.last().expect("non-empty spectrum");
    let cut = (eigenvalues.len() * 3) / 4;
    let at_cut = partials[cut.saturating_sub(1)];
    let growing = total > 0.0 && (total - at_cut) / total > tolerances::SUMMABILITY_TREND;
    (total, growing)
}

/// Builds the spectrum and its diagonal Hamiltonian `diag(E_0..E_N)`.
pub fn build_discrete_hamiltonian(
    spec: &SpectrumSpec,
) -> Result<(DiscreteSpectrum, HermitianOperator)> {
    let spectrum = match spec {
        SpectrumSpec::Harmonic { omega, levels } => DiscreteSpectrum::harmonic(*omega, *levels)?,
        SpectrumSpec::Explicit { eigenvalues } => DiscreteSpectrum::explicit(eigenvalues.clone())?,
    };
    let hamiltonian = HermitianOperator::from_diagonal(spectrum.eigenvalues())?;
    Ok((spectrum, hamiltonian))
}
