//! Dense complex-matrix kernel: the hermiticity-checked operator type,
//! eigendecomposition, unitary exponentials, PSD square roots and
//! commutators that every other module builds on.
//!
//! All operations are pure functions of immutable inputs and safe to call
//! concurrently.

pub mod eigen;
pub mod hermitian;
pub mod matrix;
pub mod propagator;
pub mod vector;

pub use eigen::{hermitian_eigendecomposition, psd_sqrt, EigenSystem};
pub use hermitian::{commutator, commutator_apply, HermitianOperator};
pub use matrix::{ComplexMatrix, RectMatrix};
pub use propagator::{unitary_exponential, UnitaryPropagator};
