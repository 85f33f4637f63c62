//! Centralized tolerance constants.
//!
//! Every threshold used by constructors, verification checks and the
//! acceptance suite lives here so runs are reproducible and no module
//! invents its own magic numbers.

/// Hermiticity defect allowed at construction, relative:
/// `defect <= HERMITICITY_REL * (1 + max-entry-magnitude)`.
pub const HERMITICITY_REL: f64 = 1e-12;

/// Eigendecomposition reconstruction residual, relative to the Frobenius
/// norm of the source: `|A U - U diag(lambda)|_F <= EIGEN_RECONSTRUCTION_REL * |A|_F`.
pub const EIGEN_RECONSTRUCTION_REL: f64 = 1e-10;

/// Orthonormality of eigenvector / propagator columns: `|U* U - I|_F`.
pub const ORTHONORMALITY: f64 = 1e-10;

/// QL sweeps allowed per unit dimension before the eigensolver reports
/// non-convergence.
pub const EIGEN_SWEEPS_PER_DIM: usize = 100;

/// Eigenvalues in `[-PSD_CLAMP_FLOOR, 0)` are treated as roundoff from
/// exact PSD constructions and clamped to zero; anything lower is a
/// genuine positivity failure.
pub const PSD_CLAMP_FLOOR: f64 = 1e-10;

/// Square-root reconstruction: `|R R - A|_F <= PSD_SQRT_RESIDUAL_REL * (1 + |A|_F)`.
pub const PSD_SQRT_RESIDUAL_REL: f64 = 1e-9;

/// Identities that hold exactly in exact arithmetic (telescoping CCR sums,
/// POVM completeness and hermiticity, omega scaling, isometry defect).
pub const EXACT_IDENTITY: f64 = 1e-12;

/// Identities forced bit-level by zero parameters (propagator at 0,
/// Weyl residual with s*t = 0, weak-Weyl residual at t = 0).
pub const ZERO_PARAMETER: f64 = 1e-14;

/// Slack on the spectrum containment interval `[-pi/omega, pi/omega]`.
pub const SPECTRUM_CONTAINMENT: f64 = 1e-9;

/// Agreement with the independent Sturm-bisection eigenvalue oracle.
pub const ORACLE_AGREEMENT: f64 = 1e-9;

/// Naimark reconstruction: `max_j |V* E_j V - F_j|_F`.
pub const DILATION_RECONSTRUCTION: f64 = 1e-10;

/// Galapon construction refuses spectra with a smaller minimal gap;
/// below this the entries `i/(E_n - E_m)` lose double-precision meaning.
pub const QUASI_DEGENERATE_GAP: f64 = 1e-12;

/// Exact first moment of the phase POVM vs its closed form.
pub const PHASE_MOMENT_CLOSED_FORM: f64 = 1e-10;

/// Elementwise link `T_phase = pi I - T_galapon(omega = 1)`.
pub const PHASE_GALAPON_LINK: f64 = 1e-12;

/// Residual-ratio floor for one mesh doubling of a second-order stencil
/// (ideal factor is 4; 3 leaves room for boundary and packet-tail terms).
pub const MESH_DOUBLING_RATIO: f64 = 3.0;

/// Robertson bound slack: `lhs >= rhs - ROBERTSON_SLACK`.
pub const ROBERTSON_SLACK: f64 = 1e-12;

/// Arrival-time density: allowed defect of the total mass `|∫Π dt - 1|`.
pub const ARRIVAL_MASS_DEFECT: f64 = 1e-3;

/// Arrival-time density: relative disagreement between the first moment
/// of the density and the operator expectation it cross-checks.
pub const ARRIVAL_MOMENT_REL: f64 = 1e-2;

/// Normalization slack accepted on caller-provided state vectors.
pub const STATE_NORM_SLACK: f64 = 1e-8;

/// Partial sums of `1/E_n^2` still growing by more than this fraction over
/// the last quartile of indices raise the summability warning flag.
pub const SUMMABILITY_TREND: f64 = 0.01;
