//! Numerical thresholds used across the crate.
//!
//! Everything here is pinned once so that library code, unit tests and the
//! acceptance suite agree on what "equal" means.

/// Closure of exact algebraic identities in f64 (weight sums, trace
/// preservation, Hermiticity residuals).
pub const EXACT: f64 = 1e-12;

/// Sum-difference completeness of signed Kraus sets. A notch looser than
/// [`EXACT`] because the coefficients come through an eigendecomposition.
pub const KRAUS_COMPLETENESS: f64 = 1e-10;

/// Agreement between closed forms and the numerically built map pipeline
/// (matrix inversion + eigendecomposition).
pub const PIPELINE: f64 = 1e-10;

/// Composition consistency of intermediate maps, which stacks two inversions.
pub const COMPOSITION: f64 = 1e-9;

/// Relative smallest-singular-value cutoff below which a superoperator is
/// treated as non-invertible. The singularity at maximal dephasing is a
/// measure-zero point; callers step around it.
pub const INVERTIBILITY: f64 = 1e-12;

/// Choi eigenvalues within this distance of zero are reported as zero, so
/// the CP/NCP classification is stable at exact boundaries.
pub const EIGENVALUE_ZERO: f64 = 1e-12;

/// Signed Kraus elements with coefficient below this are dropped: they
/// contribute nothing and their sign is undefined.
pub const KRAUS_DROP: f64 = 1e-14;

/// Off-diagonal Bell-basis residual above which a Choi matrix is rejected
/// as not Pauli-diagonal.
pub const PAULI_DIAGONAL: f64 = 1e-10;

/// Distance from the rate singularity at which the closed-form γ(p) is
/// refused rather than evaluated.
pub const RATE_SINGULARITY: f64 = 1e-12;

/// |1 - 2κ| below which the κ-form rate γ = κ′/(1−2κ) is refused.
pub const KAPPA_HALF: f64 = 1e-10;

/// Central-difference step for numerical dκ/dp.
pub const FD_STEP: f64 = 1e-6;

/// Agreement between the closed-form rate and its finite-difference form,
/// away from the singularity.
pub const RATE_FD: f64 = 1e-6;

/// Absolute tolerance of the adaptive quadrature behind the HCLA measure.
pub const QUADRATURE: f64 = 1e-12;

/// Agreement of the numerically optimized BLP measure with α/2.
pub const BLP: f64 = 1e-6;
