//! Binned outcome intervals.

use serde::Serialize;

use crate::error::{Error, Result};

/// A closed interval `[t_lo, t_hi]` cut into bins by strictly increasing
/// edges; outcome sets are unions of bins, so additivity is structural.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomePartition {
    edges: Vec<f64>,
}

impl OutcomePartition {
    pub fn new(edges: Vec<f64>) -> Result<Self> {
        if edges.len() < 2 {
            return Err(Error::InvalidPartition(
                "a partition needs at least two edges".into(),
            ));
        }
        for w in edges.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "edges must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidPartition("edges must be finite".into()));
        }
        Ok(Self { edges })
    }

    /// `bins` equal bins over `[t_lo, t_hi]`; the last edge is exactly `t_hi`.
    pub fn uniform(t_lo: f64, t_hi: f64, bins: usize) -> Result<Self> {
        if bins == 0 {
            return Err(Error::InvalidPartition("need at least one bin".into()));
        }
        let width = (t_hi - t_lo) / bins as f64;
        let mut edges: Vec<f64> = (0..bins).map(|k| t_lo + k as f64 * width).collect();
        edges.push(t_hi);
        Self::new(edges)
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn bin_count(&self) -> usize {
        self.edges.len() - 1
    }

    pub fn bin(&self, j: usize) -> (f64, f64) {
        (self.edges[j], self.edges[j + 1])
    }

    pub fn midpoint(&self, j: usize) -> f64 {
        let (a, b) = self.bin(j);
        0.5 * (a + b)
    }

    pub fn interval(&self) -> (f64, f64) {
        (self.edges[0], *self.edges.last().unwrap())
    }

    /// Merge runs of `factor` adjacent bins; the bin count must divide evenly.
    pub fn coarsened(&self, factor: usize) -> Result<Self> {
        if factor == 0 || self.bin_count() % factor != 0 {
            return Err(Error::InvalidPartition(format!(
                "cannot merge {} bins in groups of {factor}",
                self.bin_count()
            )));
        }
        let edges: Vec<f64> = self.edges.iter().copied().step_by(factor).collect();
        Self::new(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_partition_spans_exactly() {
        let p = OutcomePartition::uniform(0.0, std::f64::consts::TAU, 64).unwrap();
        assert_eq!(p.bin_count(), 64);
        assert_eq!(p.interval(), (0.0, std::f64::consts::TAU));
    }

    #[test]
    fn non_monotone_edges_are_rejected() {
        assert!(OutcomePartition::new(vec![0.0, 2.0, 1.0]).is_err());
        assert!(OutcomePartition::new(vec![0.0]).is_err());
    }

    #[test]
    fn coarsening_keeps_shared_edges() {
        let p = OutcomePartition::uniform(0.0, 8.0, 8).unwrap();
        let c = p.coarsened(2).unwrap();
        assert_eq!(c.bin_count(), 4);
        assert_eq!(c.edges(), &[0.0, 2.0, 4.0, 6.0, 8.0]);
        assert!(p.coarsened(3).is_err());
    }
}
