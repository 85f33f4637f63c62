//! Finite-dimensional models of quantum time operators.
//!
//! This crate builds dense Hermitian truncations of the canonical
//! time-operator constructions — the Galapon operator of a purely discrete
//! Hamiltonian spectrum, the oscillator phase operator, and the
//! momentum-grid pairs (Aharonov–Bohm, freely falling particle, transport,
//! relativistic) — together with the phase POVM, its moment operators and
//! Naimark dilation, and a verification layer that turns each algebraic
//! claim (canonical commutation, weak-Weyl and Weyl intertwining,
//! Robertson uncertainty, spectrum containment) into a measured residual.
//!
//! Everything is double precision and deterministic: pure builders, a
//! single spectral-decomposition route for exponentials and roots, and
//! seeded random-state suites.

pub mod error;
pub mod models;
pub mod operators;
pub mod povm;
pub mod states;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};
pub use operators::{
    commutator, hermitian_eigendecomposition, psd_sqrt, unitary_exponential, ComplexMatrix,
    EigenSystem, HermitianOperator, RectMatrix, UnitaryPropagator,
};
