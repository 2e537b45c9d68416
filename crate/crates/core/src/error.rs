use thiserror::Error;

/// Errors raised by channel construction and map analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `alpha = 0` is the Markovian limit: the roots of κ(p) = 1/2 diverge
    /// and there is no singularity to locate.
    #[error("alpha = 0 is Markovian: the roots of kappa = 1/2 diverge")]
    DegenerateAlpha,

    /// Parameters would produce a non-completely-positive full map
    /// (negative Pauli weight).
    #[error("not completely positive: {0}")]
    NotCp(String),

    /// The map up to the window's lower edge is singular, so the
    /// intermediate map is undefined there.
    #[error("dynamical map is non-invertible at p = {p}")]
    MapNonInvertible { p: f64 },

    /// The window's lower edge coincides with the crossover point α₋,
    /// where both intermediate Choi eigenvalues diverge.
    #[error("window lower edge p = {p_lo} sits on the singularity at alpha_minus = {alpha_minus}")]
    SingularWindow { p_lo: f64, alpha_minus: f64 },

    /// The canonical decoherence rate diverges at this point
    /// (maximal dephasing, κ = 1/2).
    #[error("decoherence rate diverges at p = {p}")]
    RateSingular { p: f64 },

    /// The Choi matrix is not diagonal in the Bell basis, so it does not
    /// describe a Pauli channel and the signed Kraus extraction is undefined.
    #[error("Choi matrix is not Pauli-diagonal")]
    UnsupportedForm,

    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
