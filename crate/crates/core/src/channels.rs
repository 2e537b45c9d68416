//! Parametrized families of qubit Pauli channels.
//!
//! Three families are provided, all driven by a dimensionless time-like
//! parameter p ∈ [0, 1/2]:
//!
//! - **Dephasing** with non-Markovianity strength α ∈ [0, 1]: mixing
//!   parameter κ(p) = [1 + α(1−p)]p, reducing to conventional dephasing
//!   (κ = p) at α = 0.
//! - **Depolarizing** with α ∈ [0, 2/3]: identity weight (1−3αp)(1−p) and
//!   equal X/Y/Z weights [1 + 3α(1−p)]p/3.
//! - **ToySine**, a κ(p)-only dephasing channel whose mixing parameter
//!   oscillates: κ(p) = p[1 + η sin(ωp)(1−2p)] / [1 + η(1−2p)].
//!
//! The channel action is ρ → Σ_j q_j P_j ρ P_j; the weights q_j always sum
//! to one (completeness) and stay nonnegative on the families' admissible
//! parameter ranges, so every full map from p = 0 is completely positive.

use crate::pauli::{Pauli, Sign};
use crate::{tol, Error, Result};
use nalgebra::Matrix2;
use num_complex::Complex64;

/// Dimensionless evolution parameter, restricted to [0, 1/2].
///
/// p plays the role of time: it rises monotonically from 0 (no noise) to
/// 1/2, and for the plain dephasing channel it coincides with the mixing
/// parameter κ.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TimeParam(f64);

impl TimeParam {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "time parameter p must lie in [0, 1/2], got {p}"
            )));
        }
        Ok(TimeParam(p))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// The channel family a parameter set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelFamily {
    Dephasing,
    Depolarizing,
    ToySine,
}

impl ChannelFamily {
    pub fn label(self) -> &'static str {
        match self {
            ChannelFamily::Dephasing => "dephasing",
            ChannelFamily::Depolarizing => "depolarizing",
            ChannelFamily::ToySine => "toysine",
        }
    }
}

/// A validated parameter set for one channel family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    family: ChannelFamily,
    alpha: f64,
    eta: f64,
    omega: f64,
}

impl ChannelParams {
    /// Non-Markovian dephasing with strength α ∈ [0, 1].
    pub fn dephasing(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidParameter(format!(
                "dephasing alpha must lie in [0, 1], got {alpha}"
            )));
        }
        Ok(ChannelParams {
            family: ChannelFamily::Dephasing,
            alpha,
            eta: 0.0,
            omega: 0.0,
        })
    }

    /// Non-Markovian depolarizing with strength α ∈ [0, 2/3].
    ///
    /// The upper bound keeps the identity Kraus weight (1−3αp)(1−p) real
    /// and nonnegative over the whole range p ∈ [0, 1/2].
    pub fn depolarizing(alpha: f64) -> Result<Self> {
        if !(0.0..=2.0 / 3.0).contains(&alpha) {
            return Err(Error::InvalidParameter(format!(
                "depolarizing alpha must lie in [0, 2/3], got {alpha}"
            )));
        }
        Ok(ChannelParams {
            family: ChannelFamily::Depolarizing,
            alpha,
            eta: 0.0,
            omega: 0.0,
        })
    }

    /// Oscillating-κ dephasing channel with strength η and frequency ω.
    pub fn toy_sine(eta: f64, omega: f64) -> Result<Self> {
        if !eta.is_finite() || !omega.is_finite() || eta < 0.0 || omega < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "toy channel needs finite nonnegative eta and omega, got eta = {eta}, omega = {omega}"
            )));
        }
        Ok(ChannelParams {
            family: ChannelFamily::ToySine,
            alpha: 0.0,
            eta,
            omega,
        })
    }

    pub fn family(&self) -> ChannelFamily {
        self.family
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Mixing parameter κ(p), the weight of the Z term.
    ///
    /// `None` for the depolarizing family, where the noise is spread over
    /// all three Pauli axes and no single mixing parameter exists.
    pub fn kappa(&self, p: TimeParam) -> Option<f64> {
        match self.family {
            ChannelFamily::Dephasing => Some(kappa_dephasing(self.alpha, p)),
            ChannelFamily::ToySine => Some(kappa_toy(p, self.eta, self.omega)),
            ChannelFamily::Depolarizing => None,
        }
    }

    /// Pauli weights of the full map from 0 to p.
    pub fn weights(&self, p: TimeParam) -> Result<PauliWeights> {
        match self.family {
            ChannelFamily::Dephasing => Ok(weights_dephasing(self.alpha, p)),
            ChannelFamily::Depolarizing => weights_depolarizing(self.alpha, p),
            ChannelFamily::ToySine => {
                let kappa = kappa_toy(p, self.eta, self.omega);
                if !(0.0..=1.0).contains(&kappa) {
                    return Err(Error::NotCp(format!(
                        "toy channel kappa({}) = {kappa} leaves [0, 1]",
                        p.get()
                    )));
                }
                Ok(PauliWeights {
                    q_i: 1.0 - kappa,
                    q_x: 0.0,
                    q_y: 0.0,
                    q_z: kappa,
                })
            }
        }
    }
}

/// Pauli mixing weights (q_I, q_X, q_Y, q_Z) of a channel
/// ρ → Σ_j q_j P_j ρ P_j.
///
/// For any full map from p = 0 the weights are nonnegative and sum to one.
/// Intermediate maps are represented by [`KrausSet`] instead, where signed
/// coefficients are allowed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliWeights {
    pub q_i: f64,
    pub q_x: f64,
    pub q_y: f64,
    pub q_z: f64,
}

impl PauliWeights {
    pub fn new(q_i: f64, q_x: f64, q_y: f64, q_z: f64) -> Self {
        PauliWeights { q_i, q_x, q_y, q_z }
    }

    pub fn sum(&self) -> f64 {
        self.q_i + self.q_x + self.q_y + self.q_z
    }

    /// Weights in I, X, Y, Z order.
    pub fn as_array(&self) -> [f64; 4] {
        [self.q_i, self.q_x, self.q_y, self.q_z]
    }

    /// True when all weights are nonnegative, i.e. the map is a proper
    /// (CP) Pauli channel.
    pub fn is_cp(&self) -> bool {
        self.as_array().iter().all(|&q| q >= 0.0)
    }

    /// |Σ q_j − 1|, the completeness residual.
    pub fn completeness_residual(&self) -> f64 {
        (self.sum() - 1.0).abs()
    }
}

/// Roots α₋ ≤ α₊ of κ(p) = 1/2 for the dephasing family,
/// α± = (±√(α²+1) + α + 1) / (2α).
///
/// α₋ ∈ (0, 1/2] is the crossover point: the channel is maximally
/// dephasing there, the map momentarily non-invertible, and the canonical
/// rate γ singular. α₊ ≥ 1 lies outside the evolution range.
pub fn alpha_pm(alpha: f64) -> Result<(f64, f64)> {
    if alpha == 0.0 {
        return Err(Error::DegenerateAlpha);
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    let root = (alpha * alpha + 1.0).sqrt();
    let alpha_minus = (-root + alpha + 1.0) / (2.0 * alpha);
    let alpha_plus = (root + alpha + 1.0) / (2.0 * alpha);
    Ok((alpha_minus, alpha_plus))
}

/// Mixing parameter of the non-Markovian dephasing channel,
/// κ(p) = [1 + α(1−p)]p.
///
/// Strictly increasing in p for α ∈ [0, 1]; κ(0) = 0 and κ = p at α = 0.
pub fn kappa_dephasing(alpha: f64, p: TimeParam) -> f64 {
    let p = p.get();
    (1.0 + alpha * (1.0 - p)) * p
}

/// Pauli weights of the non-Markovian dephasing channel:
/// q_I = (1−αp)(1−p), q_Z = [1 + α(1−p)]p.
pub fn weights_dephasing(alpha: f64, p: TimeParam) -> PauliWeights {
    let q_z = kappa_dephasing(alpha, p);
    let p = p.get();
    PauliWeights {
        q_i: (1.0 - alpha * p) * (1.0 - p),
        q_x: 0.0,
        q_y: 0.0,
        q_z,
    }
}

/// Pauli weights of the non-Markovian depolarizing channel:
/// q_I = (1−3αp)(1−p), q_X = q_Y = q_Z = [1 + 3α(1−p)]p/3.
pub fn weights_depolarizing(alpha: f64, p: TimeParam) -> Result<PauliWeights> {
    if !(0.0..=2.0 / 3.0).contains(&alpha) {
        return Err(Error::NotCp(format!(
            "depolarizing alpha = {alpha} leaves the CP range [0, 2/3]"
        )));
    }
    let p = p.get();
    let flip = (1.0 + 3.0 * alpha * (1.0 - p)) * p / 3.0;
    Ok(PauliWeights {
        q_i: (1.0 - 3.0 * alpha * p) * (1.0 - p),
        q_x: flip,
        q_y: flip,
        q_z: flip,
    })
}

/// Oscillating mixing parameter
/// κ(p) = p[1 + η sin(ωp)(1−2p)] / [1 + η(1−2p)].
///
/// κ(0) = 0 and κ(1/2) = 1/2 for any η, ω; in between the sine term can
/// produce intervals of negative slope, which is where this channel's
/// non-Markovianity comes from.
pub fn kappa_toy(p: TimeParam, eta: f64, omega: f64) -> f64 {
    let p = p.get();
    let window = 1.0 - 2.0 * p;
    p * (1.0 + eta * (omega * p).sin() * window) / (1.0 + eta * window)
}

/// One element √(coeff)·P of a signed Kraus decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedKraus {
    pub sign: Sign,
    pub coeff: f64,
    pub pauli: Pauli,
}

/// A signed Kraus decomposition ρ → Σ_j ε_j K_j ρ K_j† with
/// K_j = √(coeff_j)·P_j and ε_j = ±1.
///
/// With all signs positive this is an ordinary operator-sum
/// representation; a negative sign appears exactly when the map it was
/// extracted from is NCP. Completeness here reads Σ_j ε_j coeff_j = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    elements: Vec<SignedKraus>,
}

impl KrausSet {
    /// Build a set from explicit elements, checking sum-difference
    /// completeness.
    pub fn new(elements: Vec<SignedKraus>) -> Result<Self> {
        let set = KrausSet { elements };
        let residual = set.completeness_residual();
        if residual > tol::KRAUS_COMPLETENESS {
            return Err(Error::InvalidParameter(format!(
                "Kraus set violates completeness by {residual:.3e}"
            )));
        }
        Ok(set)
    }

    pub fn elements(&self) -> &[SignedKraus] {
        &self.elements
    }

    /// |Σ_j ε_j coeff_j − 1|.
    pub fn completeness_residual(&self) -> f64 {
        let signed: f64 = self.elements.iter().map(|e| e.sign.value() * e.coeff).sum();
        (signed - 1.0).abs()
    }

    /// Largest coefficient in the set; diverges as a window closes on the
    /// singularity at α₋.
    pub fn max_coeff(&self) -> f64 {
        self.elements.iter().fold(0.0, |m, e| m.max(e.coeff))
    }

    /// True when every sign is positive, i.e. the set is an ordinary CP
    /// Kraus decomposition.
    pub fn is_cp(&self) -> bool {
        self.elements.iter().all(|e| e.sign == Sign::Plus)
    }

    /// Apply the sum-difference representation to a density matrix:
    /// ρ → Σ_j ε_j coeff_j · P_j ρ P_j.
    ///
    /// Completeness guarantees the output trace equals the input trace
    /// even when individual coefficients are huge.
    pub fn apply(&self, rho: &Matrix2<Complex64>) -> Matrix2<Complex64> {
        let mut out = Matrix2::zeros();
        for e in &self.elements {
            let scale = Complex64::new(e.sign.value() * e.coeff, 0.0);
            out += e.pauli.conjugate(rho) * scale;
        }
        out
    }
}

/// Ordinary (all-positive) Kraus set K_j = √(q_j)·P_j of a Pauli channel.
///
/// Zero weights are omitted; a negative weight is rejected as NCP.
pub fn kraus_from_weights(w: &PauliWeights) -> Result<KrausSet> {
    let mut elements = Vec::new();
    for (q, p) in w.as_array().into_iter().zip(Pauli::ALL) {
        if q < 0.0 {
            return Err(Error::NotCp(format!("weight of {p:?} is negative ({q})")));
        }
        if q >= tol::KRAUS_DROP {
            elements.push(SignedKraus {
                sign: Sign::Plus,
                coeff: q,
                pauli: p,
            });
        }
    }
    KrausSet::new(elements)
}
