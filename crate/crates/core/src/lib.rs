//! Non-Markovian variants of qubit Pauli channels and their diagnostics.
//!
//! The library builds one-parameter families of dephasing and depolarizing
//! channels whose intermediate maps can lose complete positivity, and provides
//! the tools to detect and quantify that loss:
//!
//! - [`channels`] — the parametrized channel families (Pauli weights, mixing
//!   parameter κ(p), Kraus decompositions) with completeness and CP validation.
//! - [`dynmap`] — superoperator algebra: 4×4 matrix representations, map
//!   composition and inversion, intermediate maps E(t,s) = E(t,0)·E(s,0)⁻¹,
//!   Choi matrices and their spectra, signed intermediate Kraus operators.
//! - [`measures`] — the canonical decoherence rate γ(p), its singularity, the
//!   normalized HCLA measure, trace-distance dynamics and the BLP measure.
//! - [`oracle`] — brute-force reference implementations (explicit density
//!   matrix evolution, Helstrom trace distance) used to cross-validate every
//!   closed form.
//!
//! All computations are pure functions over value types; there is no shared
//! mutable state, so parameter sweeps can be parallelized freely.

pub mod channels;
pub mod dynmap;
mod error;
pub mod measures;
pub mod oracle;
pub mod pauli;
pub mod quad;
pub mod tol;

pub use channels::{ChannelFamily, ChannelParams, KrausSet, PauliWeights, TimeParam};
pub use dynmap::{ChoiMatrix, IntermediateWindow, SuperOp};
pub use error::Error;
pub use measures::{MeasureReport, RateProfile};
pub use oracle::{DensityMatrix, PureStatePair};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
