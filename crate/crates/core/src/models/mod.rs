//! Concrete Hamiltonian / time-operator pairs at finite truncation:
//! discrete-spectrum constructions (Galapon, oscillator phase) and
//! momentum-grid models (Aharonov–Bohm, freely falling particle,
//! transport, relativistic).

pub mod galapon;
pub mod grid;
pub mod pair;
pub mod spectrum;

pub use galapon::{build_galapon, build_phase_operator};
pub use grid::{
    build_grid_model, build_momentum_grid, position_operator, GridModel, MomentumGrid,
};
pub use pair::{ModelKind, ModelPair};
pub use spectrum::{build_discrete_hamiltonian, DiscreteSpectrum, SpectrumSpec};
