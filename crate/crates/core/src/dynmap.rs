//! Superoperator algebra for qubit Pauli channels.
//!
//! Channels are represented as 4×4 matrices acting on column-vectorized
//! density operators, using vec(ABC) = (Cᵀ ⊗ A)·vec(B). That makes the
//! composition law a matrix product and the intermediate map between two
//! times an explicit inversion, E(t,s) = E(t,0)·E(s,0)⁻¹. The Choi matrix
//! of a map (trace-2 convention, built on the unnormalized |00⟩ + |11⟩)
//! then decides complete positivity: any negative eigenvalue of an
//! intermediate map's Choi matrix witnesses non-Markovianity of the full
//! evolution. NCP intermediate maps still act on states through the
//! operator sum-difference representation, extracted here as a signed
//! [`KrausSet`].

use crate::channels::{ChannelParams, KrausSet, PauliWeights, SignedKraus, TimeParam};
use crate::pauli::{Pauli, Sign};
use crate::{channels, tol, Error, Result};
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;

const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Column-stacking vectorization of a 2×2 matrix.
fn vectorize(m: &Matrix2<Complex64>) -> Vector4<Complex64> {
    Vector4::new(m[(0, 0)], m[(1, 0)], m[(0, 1)], m[(1, 1)])
}

/// Inverse of [`vectorize`].
fn devectorize(v: &Vector4<Complex64>) -> Matrix2<Complex64> {
    Matrix2::new(v[0], v[2], v[1], v[3])
}

/// A 4×4 matrix representation of a qubit map on column-vectorized
/// density operators.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperOp {
    m: Matrix4<Complex64>,
}

impl SuperOp {
    pub fn identity() -> Self {
        SuperOp {
            m: Matrix4::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.m
    }

    /// Matrix representation Σ_j q_j (P_jᵀ ⊗ P_j) of the Pauli channel
    /// with the given weights.
    ///
    /// Real for every Pauli channel, and diagonal for dephasing.
    pub fn from_weights(w: &PauliWeights) -> Self {
        let mut m = Matrix4::zeros();
        for (q, p) in w.as_array().into_iter().zip(Pauli::ALL) {
            if q != 0.0 {
                let pm = p.matrix();
                m += pm.transpose().kronecker(&pm) * Complex64::new(q, 0.0);
            }
        }
        SuperOp { m }
    }

    /// Action on a 2×2 operator.
    pub fn apply(&self, rho: &Matrix2<Complex64>) -> Matrix2<Complex64> {
        devectorize(&(self.m * vectorize(rho)))
    }

    /// Inverse map, or `None` when the smallest singular value falls
    /// below [`tol::INVERTIBILITY`] relative to the largest.
    pub fn inverse(&self) -> Option<SuperOp> {
        let sv = self.m.singular_values();
        let max = sv.iter().fold(0.0f64, |m, &s| m.max(s));
        let min = sv.iter().fold(f64::INFINITY, |m, &s| m.min(s));
        if max == 0.0 || min <= tol::INVERTIBILITY * max {
            return None;
        }
        self.m.try_inverse().map(|m| SuperOp { m })
    }

    /// Largest deviation of tr E(e_ij) from δ_ij over the matrix-unit
    /// basis; zero for trace-preserving maps.
    pub fn trace_preserving_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut unit = Matrix2::zeros();
                unit[(i, j)] = C_ONE;
                let expected = if i == j { 1.0 } else { 0.0 };
                let t = self.apply(&unit).trace();
                worst = worst.max((t.re - expected).abs()).max(t.im.abs());
            }
        }
        worst
    }

    /// Largest residual of E(e_ij)† − E(e_ji) over the matrix-unit basis;
    /// zero for Hermiticity-preserving maps.
    pub fn hermiticity_preserving_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                let mut unit = Matrix2::zeros();
                unit[(i, j)] = C_ONE;
                let mut flipped = Matrix2::zeros();
                flipped[(j, i)] = C_ONE;
                let residual = (self.apply(&unit).adjoint() - self.apply(&flipped)).norm();
                worst = worst.max(residual);
            }
        }
        worst
    }
}

/// Composition a∘b as a matrix product.
pub fn compose(a: &SuperOp, b: &SuperOp) -> SuperOp {
    SuperOp { m: a.m * b.m }
}

/// Matrix representation of a channel's full map from 0 to p.
pub fn superop_from_weights(w: &PauliWeights) -> SuperOp {
    SuperOp::from_weights(w)
}

/// Intermediate map E(t,s) = E(t,0)·E(s,0)⁻¹.
///
/// `p_lo` names the lower window edge in the error raised when E(s,0) is
/// singular — for the dephasing family that happens exactly at the
/// maximal-dephasing point p = α₋.
pub fn intermediate_map(e_t0: &SuperOp, e_s0: &SuperOp, p_lo: f64) -> Result<SuperOp> {
    let inv = e_s0.inverse().ok_or(Error::MapNonInvertible { p: p_lo })?;
    Ok(compose(e_t0, &inv))
}

/// A time window [p_∗, p*] over which an intermediate map is taken.
/// The edges may coincide, in which case the intermediate map is the
/// identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntermediateWindow {
    p_lo: TimeParam,
    p_hi: TimeParam,
}

impl IntermediateWindow {
    pub fn new(p_lo: TimeParam, p_hi: TimeParam) -> Result<Self> {
        if p_lo.get() > p_hi.get() {
            return Err(Error::InvalidParameter(format!(
                "window is reversed: p_lo = {} > p_hi = {}",
                p_lo.get(),
                p_hi.get()
            )));
        }
        Ok(IntermediateWindow { p_lo, p_hi })
    }

    pub fn from_values(p_lo: f64, p_hi: f64) -> Result<Self> {
        IntermediateWindow::new(TimeParam::new(p_lo)?, TimeParam::new(p_hi)?)
    }

    pub fn p_lo(&self) -> TimeParam {
        self.p_lo
    }

    pub fn p_hi(&self) -> TimeParam {
        self.p_hi
    }
}

/// Intermediate map of a channel family over a window, built from the two
/// full maps.
pub fn channel_intermediate(params: &ChannelParams, window: IntermediateWindow) -> Result<SuperOp> {
    let e_hi = SuperOp::from_weights(&params.weights(window.p_hi())?);
    let e_lo = SuperOp::from_weights(&params.weights(window.p_lo())?);
    intermediate_map(&e_hi, &e_lo, window.p_lo().get())
}

/// Choi matrix of a qubit map, trace-2 convention: the image of the
/// unnormalized maximally entangled state, χ = Σ_ij E(|i⟩⟨j|) ⊗ |i⟩⟨j|.
///
/// Hermitian for Hermiticity-preserving maps; positive semidefinite iff
/// the map is CP.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    c: Matrix4<Complex64>,
}

/// Choi matrix of a superoperator.
pub fn choi(s: &SuperOp) -> ChoiMatrix {
    let mut c = Matrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let mut unit = Matrix2::zeros();
            unit[(i, j)] = C_ONE;
            let image = s.apply(&unit);
            for a in 0..2 {
                for b in 0..2 {
                    c[(2 * a + i, 2 * b + j)] += image[(a, b)];
                }
            }
        }
    }
    ChoiMatrix { c }
}

impl ChoiMatrix {
    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.c
    }

    /// Real eigenvalues, sorted descending. Values within
    /// [`tol::EIGENVALUE_ZERO`] of zero are reported as exactly zero so
    /// CP/NCP verdicts are stable at boundaries.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let mut eigs = [0.0f64; 4];
        for (slot, e) in eigs.iter_mut().zip(self.c.symmetric_eigenvalues().iter()) {
            *slot = if e.abs() < tol::EIGENVALUE_ZERO {
                0.0
            } else {
                *e
            };
        }
        eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
        eigs
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[3]
    }

    /// CP verdict: no eigenvalue below −[`tol::EIGENVALUE_ZERO`].
    pub fn is_cp(&self) -> bool {
        self.min_eigenvalue() >= 0.0
    }

    /// Trace norm Σ|λ|; equals 2 for CP trace-preserving maps and
    /// exceeds 2 exactly when the map is NCP.
    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues().iter().map(|e| e.abs()).sum()
    }

    pub fn trace(&self) -> f64 {
        self.c.trace().re
    }

    pub fn hermiticity_residual(&self) -> f64 {
        (self.c - self.c.adjoint()).norm()
    }
}

/// Eigenvalues of a Choi matrix, sorted descending.
pub fn choi_eigs(c: &ChoiMatrix) -> [f64; 4] {
    c.eigenvalues()
}

/// Closed-form nonzero Choi eigenvalues (λ_I, λ_Z) of the dephasing
/// intermediate map over [p_∗, p*]:
/// λ_I = 1 + (α₋−p*)(α₊−p*) / ((α₋−p_∗)(α₊−p_∗)), λ_Z = 2 − λ_I.
pub fn lambda_closed_form(alpha: f64, p_star_hi: f64, p_star_lo: f64) -> Result<(f64, f64)> {
    let (a_minus, a_plus) = channels::alpha_pm(alpha)?;
    if (p_star_lo - a_minus).abs() < tol::RATE_SINGULARITY
        || (p_star_lo - a_plus).abs() < tol::RATE_SINGULARITY
    {
        return Err(Error::SingularWindow {
            p_lo: p_star_lo,
            alpha_minus: a_minus,
        });
    }
    let ratio = ((a_minus - p_star_hi) * (a_plus - p_star_hi))
        / ((a_minus - p_star_lo) * (a_plus - p_star_lo));
    let lambda_i = 1.0 + ratio;
    // λ_Z = 1 − ratio up to rounding; writing it as 2 − λ_I keeps the
    // eigenvalue sum exactly 2, the trace of the Choi matrix.
    Ok((lambda_i, 2.0 - lambda_i))
}

/// Normalized Bell basis (P_j ⊗ I)(|00⟩ + |11⟩)/√2 in I, X, Y, Z order.
fn bell_basis() -> [Vector4<Complex64>; 4] {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let i = Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
    let zero = Complex64::new(0.0, 0.0);
    [
        Vector4::new(s, zero, zero, s),
        Vector4::new(zero, s, s, zero),
        Vector4::new(zero, -i, i, zero),
        Vector4::new(s, zero, zero, -s),
    ]
}

/// Signed Kraus operators of a Pauli-diagonal Choi matrix.
///
/// Each Bell eigenvalue λ_j contributes an element (sign(λ_j), |λ_j|/2,
/// P_j); the 1/2 restores sum-difference completeness under the trace-2
/// Choi convention. Elements with coefficient below [`tol::KRAUS_DROP`]
/// are dropped — they contribute nothing and their sign is undefined.
pub fn intermediate_kraus(c: &ChoiMatrix) -> Result<KrausSet> {
    let bell = bell_basis();
    let scale = c.c.norm().max(1.0);
    let mut lambdas = [0.0f64; 4];
    for (j, bj) in bell.iter().enumerate() {
        for (k, bk) in bell.iter().enumerate() {
            let element: Complex64 = (bj.adjoint() * c.c * bk)[(0, 0)];
            if j == k {
                if element.im.abs() > tol::PAULI_DIAGONAL * scale {
                    return Err(Error::UnsupportedForm);
                }
                lambdas[j] = element.re;
            } else if element.norm() > tol::PAULI_DIAGONAL * scale {
                return Err(Error::UnsupportedForm);
            }
        }
    }
    let mut elements = Vec::new();
    for (lambda, pauli) in lambdas.into_iter().zip(Pauli::ALL) {
        let coeff = lambda.abs() / 2.0;
        if coeff >= tol::KRAUS_DROP {
            elements.push(SignedKraus {
                sign: Sign::of(lambda),
                coeff,
                pauli,
            });
        }
    }
    KrausSet::new(elements)
}
