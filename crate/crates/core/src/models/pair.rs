//! A Hamiltonian / time-operator pair with its construction conventions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::HermitianOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Galapon,
    Phase,
    AharonovBohm,
    Falling,
    Transport,
    Relativistic,
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Galapon => "galapon",
            ModelKind::Phase => "phase",
            ModelKind::AharonovBohm => "aharonov_bohm",
            ModelKind::Falling => "falling",
            ModelKind::Transport => "transport",
            ModelKind::Relativistic => "relativistic",
        }
    }
}

/// A matched `(H, T)` pair of equal dimension.
///
/// `conventions` records every sign or prefactor choice that departs from
/// the commonly quoted formula for the model; it is empty when the formula
/// was used verbatim. `domain_note` describes the vector class on which
/// the canonical commutation relation is expected to hold.
#[derive(Debug, Clone, Serialize)]
pub struct ModelPair {
    pub hamiltonian: HermitianOperator,
    pub time_operator: HermitianOperator,
    pub kind: ModelKind,
    pub conventions: Vec<String>,
    pub domain_note: String,
}

impl ModelPair {
    pub fn new(
        hamiltonian: HermitianOperator,
        time_operator: HermitianOperator,
        kind: ModelKind,
        conventions: Vec<String>,
        domain_note: impl Into<String>,
    ) -> Result<Self> {
        if hamiltonian.dim() != time_operator.dim() {
            return Err(Error::DimensionMismatch {
                left: hamiltonian.dim(),
                right: time_operator.dim(),
            });
        }
        Ok(Self {
            hamiltonian,
            time_operator,
            kind,
            conventions,
            domain_note: domain_note.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.hamiltonian.dim()
    }
}
