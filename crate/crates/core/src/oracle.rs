//! Brute-force reference implementations.
//!
//! Nothing here knows about the closed forms elsewhere in the crate: states
//! are evolved by explicitly conjugating density matrices with Pauli
//! operators, and distinguishability is measured by diagonalizing the
//! Helstrom difference matrix. Every analytic shortcut in [`crate::measures`]
//! is validated against this module before it is trusted.

use crate::channels::PauliWeights;
use crate::pauli::Pauli;
use crate::{tol, Error, Result};
use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

/// A qubit density matrix: 2×2, Hermitian, unit trace, positive
/// semidefinite up to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    rho: Matrix2<Complex64>,
}

impl DensityMatrix {
    /// Validate and wrap a matrix as a physical state.
    pub fn new(rho: Matrix2<Complex64>) -> Result<Self> {
        let herm = (rho - rho.adjoint()).norm();
        if herm > tol::EXACT {
            return Err(Error::InvalidParameter(format!(
                "density matrix not Hermitian, residual {herm:.3e}"
            )));
        }
        let trace = rho.trace();
        if (trace.re - 1.0).abs() > tol::EXACT || trace.im.abs() > tol::EXACT {
            return Err(Error::InvalidParameter(format!(
                "density matrix trace is {trace}, expected 1"
            )));
        }
        let min_eig = rho
            .symmetric_eigenvalues()
            .iter()
            .fold(f64::INFINITY, |m, &e| m.min(e));
        if min_eig < -tol::EXACT {
            return Err(Error::InvalidParameter(format!(
                "density matrix has negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(DensityMatrix { rho })
    }

    /// Pure state cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ as a projector.
    pub fn pure(theta: f64, phi: f64) -> Self {
        let ket = Vector2::new(
            Complex64::new((theta / 2.0).cos(), 0.0),
            Complex64::from_polar(1.0, phi) * (theta / 2.0).sin(),
        );
        DensityMatrix {
            rho: ket * ket.adjoint(),
        }
    }

    /// Diagonal mixed state diag(a, 1−a).
    pub fn diagonal(a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::InvalidParameter(format!(
                "diagonal population must lie in [0, 1], got {a}"
            )));
        }
        Ok(DensityMatrix {
            rho: Matrix2::new(
                Complex64::new(a, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0 - a, 0.0),
            ),
        })
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.rho
    }

    /// Bloch vector (⟨X⟩, ⟨Y⟩, ⟨Z⟩).
    pub fn bloch(&self) -> [f64; 3] {
        [
            (self.rho * Pauli::X.matrix()).trace().re,
            (self.rho * Pauli::Y.matrix()).trace().re,
            (self.rho * Pauli::Z.matrix()).trace().re,
        ]
    }
}

/// The antipodal pure-state pair of the trace-distance analysis:
/// |ψ₀⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ and its orthogonal complement
/// |ψ₁⟩ = −sin(θ/2)|0⟩ + e^{iφ} cos(θ/2)|1⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureStatePair {
    pub theta: f64,
    pub phi: f64,
}

impl PureStatePair {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::InvalidParameter(format!(
                "theta must lie in [0, pi], got {theta}"
            )));
        }
        if !phi.is_finite() {
            return Err(Error::InvalidParameter("phi must be finite".into()));
        }
        Ok(PureStatePair { theta, phi })
    }
}

/// The two orthogonal projectors of a [`PureStatePair`].
pub fn pair_states(pair: PureStatePair) -> (DensityMatrix, DensityMatrix) {
    let half = pair.theta / 2.0;
    let phase = Complex64::from_polar(1.0, pair.phi);
    let ket0 = Vector2::new(Complex64::new(half.cos(), 0.0), phase * half.sin());
    let ket1 = Vector2::new(Complex64::new(-half.sin(), 0.0), phase * half.cos());
    (
        DensityMatrix {
            rho: ket0 * ket0.adjoint(),
        },
        DensityMatrix {
            rho: ket1 * ket1.adjoint(),
        },
    )
}

/// Evolve a state through a Pauli channel by explicit conjugation,
/// ρ → Σ_j q_j P_j ρ P_j.
pub fn evolve(w: &PauliWeights, rho: &DensityMatrix) -> DensityMatrix {
    let mut out = Matrix2::zeros();
    for (q, p) in w.as_array().into_iter().zip(Pauli::ALL) {
        if q != 0.0 {
            out += p.conjugate(rho.matrix()) * Complex64::new(q, 0.0);
        }
    }
    DensityMatrix { rho: out }
}

/// Helstrom trace distance ½‖ρ₀ − ρ₁‖₁, computed from the eigenvalues of
/// the Hermitian difference.
///
/// Ranges over [0, 1]: zero iff the states coincide, one iff their
/// supports are orthogonal.
pub fn helstrom_td(rho0: &DensityMatrix, rho1: &DensityMatrix) -> f64 {
    let delta = rho0.matrix() - rho1.matrix();
    0.5 * delta
        .symmetric_eigenvalues()
        .iter()
        .map(|e| e.abs())
        .sum::<f64>()
}
