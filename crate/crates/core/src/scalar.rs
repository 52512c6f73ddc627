//! Coefficient abstraction for the algebra layers.
//!
//! Everything above the coefficient level (free algebra, rewriting,
//! linear solving, the ladder-operator oracle) is generic over a [`Scalar`]:
//! an exact field with displayable elements. Two instantiations are used in
//! practice and aliased at the crate root: [`crate::QRat`] for symbolic work
//! over Q(q), and [`crate::Rational`] for numeric evaluation at a fixed q.

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::QRat;

/// An exact field of coefficients.
///
/// `Zero` and `One` bring in `Add` and `Mul`; the remaining ring and field
/// operations are required explicitly. Implementations must have exact,
/// decidable equality — floating point does not qualify.
pub trait Scalar:
    Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
{
    /// The canonical image of an integer in the field.
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Size measure used by elimination pivoting; smaller is cheaper.
    fn pivot_cost(&self) -> u64 {
        0
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
}

impl Scalar for QRat {
    fn from_int(n: i64) -> Self {
        QRat::from_int(n)
    }

    fn inv(&self) -> Self {
        QRat::inv(self)
    }

    fn pivot_cost(&self) -> u64 {
        self.total_degree()
    }
}
