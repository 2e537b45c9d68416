//! The single-qubit Pauli operators.

use nalgebra::Matrix2;
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const NEG_ONE: Complex64 = Complex64::new(-1.0, 0.0);
const I_UNIT: Complex64 = Complex64::new(0.0, 1.0);
const NEG_I_UNIT: Complex64 = Complex64::new(0.0, -1.0);

/// One of the four Pauli operators (including the identity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// All four operators in the conventional I, X, Y, Z order.
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// The 2×2 matrix of this operator.
    pub fn matrix(self) -> Matrix2<Complex64> {
        match self {
            Pauli::I => Matrix2::new(ONE, ZERO, ZERO, ONE),
            Pauli::X => Matrix2::new(ZERO, ONE, ONE, ZERO),
            Pauli::Y => Matrix2::new(ZERO, NEG_I_UNIT, I_UNIT, ZERO),
            Pauli::Z => Matrix2::new(ONE, ZERO, ZERO, NEG_ONE),
        }
    }

    /// Conjugation action P ρ P.
    pub fn conjugate(self, rho: &Matrix2<Complex64>) -> Matrix2<Complex64> {
        let p = self.matrix();
        p * rho * p
    }

    /// Lower-case name, used in data-file headers and reports.
    pub fn label(self) -> &'static str {
        match self {
            Pauli::I => "i",
            Pauli::X => "x",
            Pauli::Y => "y",
            Pauli::Z => "z",
        }
    }
}

/// The sign ε = ±1 attached to a Kraus element in the operator
/// sum-difference representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// Sign of a real number; zero maps to `Plus`.
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}
