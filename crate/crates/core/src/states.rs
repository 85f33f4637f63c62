//! State-vector constructors: basis and difference vectors, Gaussian
//! wavepackets on momentum grids, and seeded Haar-random states.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::models::MomentumGrid;
use crate::operators::vector;

/// `e_k` in dimension `dim`.
pub fn basis_vector(dim: usize, k: usize) -> Vec<Complex64> {
    assert!(k < dim, "basis index out of range");
    let mut v = vec![Complex64::ZERO; dim];
    v[k] = Complex64::ONE;
    v
}

/// Normalized difference vector `(e_k - e_l) / sqrt(2)`.
pub fn difference_vector(dim: usize, k: usize, l: usize) -> Vec<Complex64> {
    assert!(k < dim && l < dim && k != l, "bad difference indices");
    let amp = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let mut v = vec![Complex64::ZERO; dim];
    v[k] = amp;
    v[l] = -amp;
    v
}

/// All index pairs `(k, l)` with `k < l` — the difference-vector domain.
pub fn difference_pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |k| ((k + 1)..dim).map(move |l| (k, l)))
}

/// Gaussian wavepacket on a momentum grid, centered at `p0` with momentum
/// standard deviation `width`, carrying the position offset `x0` as the
/// phase `e^{-i p x0}`. Normalized in the grid norm: `dp * sum |psi|^2 = 1`.
pub fn gaussian_packet(
    grid: &MomentumGrid,
    p0: f64,
    width: f64,
    x0: f64,
) -> Result<Vec<Complex64>> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::InvalidState(format!(
            "packet width must be positive, got {width}"
        )));
    }
    if !p0.is_finite() || !x0.is_finite() {
        return Err(Error::InvalidState("packet parameters must be finite".into()));
    }
    let mut psi: Vec<Complex64> = grid
        .points()
        .iter()
        .map(|&p| {
            let envelope = (-((p - p0) * (p - p0)) / (4.0 * width * width)).exp();
            Complex64::from_polar(envelope, -p * x0)
        })
        .collect();
    let norm = grid_norm(grid, &psi);
    if norm <= 0.0 {
        return Err(Error::InvalidState(
            "packet has no support on the grid".into(),
        ));
    }
    for z in &mut psi {
        *z /= norm;
    }
    Ok(psi)
}

/// Grid (`dp`-weighted) norm.
pub fn grid_norm(grid: &MomentumGrid, psi: &[Complex64]) -> f64 {
    assert_eq!(psi.len(), grid.len(), "state/grid length mismatch");
    (grid.spacing() * psi.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
}

/// Grid (`dp`-weighted) inner product, conjugating the first argument.
pub fn grid_inner(grid: &MomentumGrid, a: &[Complex64], b: &[Complex64]) -> Complex64 {
    grid.spacing() * vector::inner(a, b)
}

/// Rescale to a unit vector in the plain l2 norm. On a uniform grid the
/// weighted and unweighted unit spheres differ only by the scalar
/// `sqrt(dp)`, so residual ratios computed either way coincide.
pub fn unit_l2(v: &[Complex64]) -> Vec<Complex64> {
    vector::normalized(v)
}

/// Haar-random unit vector: i.i.d. complex standard normal components,
/// then normalization. Deterministic for a fixed generator state.
pub fn random_unit_state(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    assert!(dim > 0, "state dimension must be positive");
    let v: Vec<Complex64> = (0..dim)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im)
        })
        .collect();
    vector::normalized(&v)
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;

    use super::*;
    use crate::models::build_momentum_grid;

    #[test]
    fn difference_vectors_are_unit() {
        let v = difference_vector(5, 1, 3);
        assert_abs_diff_eq!(vector::norm(&v), 1.0, epsilon = 1e-15);
        assert_eq!(difference_pairs(17).count(), 136);
    }

    #[test]
    fn gaussian_packet_is_grid_normalized() {
        let grid = build_momentum_grid(1.0, 9.0, 200, 0.5).unwrap();
        let psi = gaussian_packet(&grid, 5.0, 0.5, -2.0).unwrap();
        assert_abs_diff_eq!(grid_norm(&grid, &psi), 1.0, epsilon = 1e-12);
        // The x0 phase does not change the modulus profile.
        let flat = gaussian_packet(&grid, 5.0, 0.5, 0.0).unwrap();
        for (a, b) in psi.iter().zip(&flat) {
            assert_abs_diff_eq!(a.norm(), b.norm(), epsilon = 1e-12);
        }
    }

    #[test]
    fn random_states_are_seed_deterministic() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(7);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let a = random_unit_state(12, &mut rng1);
        let b = random_unit_state(12, &mut rng2);
        assert_eq!(a, b);
        assert_abs_diff_eq!(vector::norm(&a), 1.0, epsilon = 1e-14);
    }
}
