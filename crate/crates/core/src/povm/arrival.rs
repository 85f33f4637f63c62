//! Free-particle time-of-arrival density.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::models::MomentumGrid;
use crate::states;

/// Arrival-time density of a free wavepacket,
///
/// `Pi(t) = (1/2pi) [ |sum_{p>0} dp sqrt(p/m) e^{i t p^2/(2m)} psi(p)|^2
///                  + |sum_{p<0} dp sqrt(-p/m) e^{i t p^2/(2m)} psi(p)|^2 ]`,
///
/// the two half-lines entering as independent channels. The exponent
/// `p^2/(2m)` matches the generator `H = P^2/2m`, so the first moment of
/// `Pi` cross-checks against the expectation of the symmetrized `Q/P`
/// time operator. `psi` must be normalized in the grid norm; the result
/// is pointwise nonnegative.
pub fn arrival_density(
    psi: &[Complex64],
    grid: &MomentumGrid,
    mass: f64,
    times: &[f64],
) -> Result<Vec<f64>> {
    if psi.len() != grid.len() {
        return Err(Error::DimensionMismatch {
            left: grid.len(),
            right: psi.len(),
        });
    }
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(Error::InvalidInput(format!(
            "mass must be positive and finite, got {mass}"
        )));
    }
    if times.is_empty() {
        return Err(Error::InvalidInput("empty time vector".into()));
    }
    let norm = states::grid_norm(grid, psi);
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidState(format!(
            "psi must be normalized in the grid norm, got |psi| = {norm}"
        )));
    }

    let dp = grid.spacing();
    // Per-point kernel weight dp * sqrt(|p|/m) * psi_j and energy p^2/2m.
    let weights: Vec<Complex64> = grid
        .points()
        .iter()
        .zip(psi)
        .map(|(&p, &a)| a * (dp * (p.abs() / mass).sqrt()))
        .collect();
    let energies: Vec<f64> = grid.points().iter().map(|&p| p * p / (2.0 * mass)).collect();

    let mut density = Vec::with_capacity(times.len());
    for &t in times {
        let mut plus = Complex64::ZERO;
        let mut minus = Complex64::ZERO;
        for ((&p, &w), &e) in grid.points().iter().zip(&weights).zip(&energies) {
            let term = w * Complex64::from_polar(1.0, t * e);
            if p > 0.0 {
                plus += term;
            } else {
                minus += term;
            }
        }
        density.push((plus.norm_sqr() + minus.norm_sqr()) / TAU);
    }
    Ok(density)
}

/// Trapezoid rule over a sample grid; used for mass and moment integrals
/// of the density.
pub fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len(), "trapezoid length mismatch");
    let mut acc = 0.0;
    for k in 1..xs.len() {
        acc += 0.5 * (xs[k] - xs[k - 1]) * (ys[k] + ys[k - 1]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::models::{build_grid_model, build_momentum_grid, GridModel};
    use crate::states::{gaussian_packet, grid_inner};

    fn time_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
        let n = ((hi - lo) / step).round() as usize;
        (0..=n).map(|k| lo + k as f64 * step).collect()
    }

    #[test]
    fn positive_support_leaves_the_negative_channel_empty() {
        // On a split grid with a packet on the positive half, the density
        // equals the positive-channel sum alone.
        let grid = build_momentum_grid(-9.0, 9.0, 128, 0.5).unwrap();
        let psi = gaussian_packet(&grid, 5.0, 0.5, 0.0).unwrap();
        let times = [0.0, 0.3, -0.8];
        let full = arrival_density(&psi, &grid, 1.0, &times).unwrap();

        let mut positive_only = psi.clone();
        for (z, &p) in positive_only.iter_mut().zip(grid.points()) {
            if p < 0.0 {
                *z = Complex64::ZERO;
            }
        }
        // Tail mass below p=0 is ~1e-14, so renormalization is a no-op.
        let alt = arrival_density(&positive_only, &grid, 1.0, &times).unwrap();
        for (a, b) in full.iter().zip(&alt) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn mirror_symmetry_swaps_the_channels() {
        let grid = build_momentum_grid(-9.0, 9.0, 128, 0.5).unwrap();
        let psi = gaussian_packet(&grid, 5.0, 0.5, -1.0).unwrap();
        let mirrored: Vec<Complex64> = psi.iter().rev().copied().collect();
        let times = time_grid(-1.0, 1.0, 0.25);
        let a = arrival_density(&psi, &grid, 1.0, &times).unwrap();
        let b = arrival_density(&mirrored, &grid, 1.0, &times).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-13);
        }
    }

    #[test]
    fn density_is_nonnegative_and_rejects_bad_input() {
        let grid = build_momentum_grid(1.0, 9.0, 64, 0.5).unwrap();
        let psi = gaussian_packet(&grid, 5.0, 0.5, 0.0).unwrap();
        let times = time_grid(-2.0, 2.0, 0.05);
        let density = arrival_density(&psi, &grid, 1.0, &times).unwrap();
        assert!(density.iter().all(|&v| v >= 0.0));

        let unnormalized: Vec<Complex64> = psi.iter().map(|z| z * 2.0).collect();
        assert!(arrival_density(&unnormalized, &grid, 1.0, &times).is_err());
        assert!(arrival_density(&psi, &grid, 1.0, &[]).is_err());
    }

    #[test]
    fn mass_and_first_moment_cross_check_the_time_operator() {
        // Coarser, faster twin of the acceptance criterion.
        let grid = build_momentum_grid(1.0, 9.0, 200, 0.5).unwrap();
        let psi = gaussian_packet(&grid, 5.0, 0.5, -2.0).unwrap();
        let times = time_grid(-3.0, 3.0, 2e-3);
        let density = arrival_density(&psi, &grid, 1.0, &times).unwrap();

        let mass = trapezoid(&times, &density);
        assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-3);

        let weighted: Vec<f64> = times
            .iter()
            .zip(&density)
            .map(|(&t, &v)| t * v)
            .collect();
        let first_moment = trapezoid(&times, &weighted);

        let pair = build_grid_model(&GridModel::AharonovBohm { mass: 1.0 }, &grid).unwrap();
        let expectation = grid_inner(&grid, &psi, &pair.time_operator.apply(&psi)).re;
        assert!(
            (first_moment - expectation).abs() <= 1e-2 * expectation.abs(),
            "moment {first_moment} vs expectation {expectation}"
        );
        // The offset packet makes the cross-check informative.
        assert!(expectation.abs() > 0.1);
    }
}
