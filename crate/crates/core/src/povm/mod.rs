//! POVMs over binned outcome intervals: the oscillator phase POVM with
//! closed-form bin integrals, axiom verification, moment operators,
//! Naimark dilation, and the free-particle arrival-time density.

pub mod arrival;
pub mod axioms;
pub mod moment;
pub mod naimark;
pub mod partition;
pub mod phase;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::HermitianOperator;

pub use arrival::{arrival_density, trapezoid};
pub use axioms::povm_axioms_check;
pub use moment::{povm_moment, MomentOrder, MomentRule};
pub use naimark::{naimark_dilate, NaimarkDilation};
pub use partition::OutcomePartition;
pub use phase::build_phase_povm;

/// How a POVM was constructed; exact moment rules key off this.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PovmConstruction {
    /// Oscillator phase POVM on `[0, 2pi)` with number-basis dimension
    /// `n_max + 1`.
    PhaseOscillator { n_max: usize },
    Custom { description: String },
}

/// One positive element per bin of an outcome partition.
///
/// Construction validates structure (bin/element counts, equal dims);
/// the analytic axioms — completeness, hermiticity, positivity — are the
/// business of [`povm_axioms_check`], which the builders in this module
/// guarantee and perturbed inputs can fail.
#[derive(Debug, Clone, Serialize)]
pub struct Povm {
    partition: OutcomePartition,
    elements: Vec<HermitianOperator>,
    metadata: PovmConstruction,
}

impl Povm {
    pub fn new(
        partition: OutcomePartition,
        elements: Vec<HermitianOperator>,
        metadata: PovmConstruction,
    ) -> Result<Self> {
        if elements.len() != partition.bin_count() {
            return Err(Error::InvalidPovm(format!(
                "{} elements for {} bins",
                elements.len(),
                partition.bin_count()
            )));
        }
        let dim = elements
            .first()
            .ok_or_else(|| Error::InvalidPovm("a POVM needs at least one element".into()))?
            .dim();
        if elements.iter().any(|f| f.dim() != dim) {
            return Err(Error::InvalidPovm("elements differ in dimension".into()));
        }
        Ok(Self {
            partition,
            elements,
            metadata,
        })
    }

    pub fn partition(&self) -> &OutcomePartition {
        &self.partition
    }

    pub fn elements(&self) -> &[HermitianOperator] {
        &self.elements
    }

    pub fn metadata(&self) -> &PovmConstruction {
        &self.metadata
    }

    pub fn dim(&self) -> usize {
        self.elements[0].dim()
    }

    pub fn bin_count(&self) -> usize {
        self.elements.len()
    }

    /// Merge runs of `factor` adjacent bins by summing their elements —
    /// additivity over unions made concrete.
    pub fn coarsened(&self, factor: usize) -> Result<Povm> {
        let partition = self.partition.coarsened(factor)?;
        let dim = self.dim();
        let mut elements = Vec::with_capacity(self.elements.len() / factor);
        for group in self.elements.chunks(factor) {
            let mut acc = crate::operators::ComplexMatrix::zeros(dim);
            for f in group {
                acc = &acc + f.matrix();
            }
            elements.push(HermitianOperator::new(acc)?);
        }
        Povm::new(partition, elements, self.metadata.clone())
    }
}
