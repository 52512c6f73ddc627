//! Exact arithmetic: rationals, polynomials in `q`, the field Q(q), and
//! q-special combinatorics.
//!
//! Plain rational scalars are [`num_rational::BigRational`]; the polynomial
//! and rational-function layers on top are built here.

mod qcomb;
mod qpoly;
mod qrat;

pub use qcomb::{q_binomial, q_binomial_by_factorials, q_factorial, q_number, q_number_base};
pub use qpoly::QPoly;
pub use qrat::QRat;

use num_rational::BigRational;

/// Convenience: `{n}_q` as an element of Q(q).
pub fn qnum(n: i64) -> QRat {
    QRat::from_poly(q_number(n))
}

/// Convenience: `{n}_{q^k}` as an element of Q(q).
pub fn qnum_base(n: i64, k: u32) -> QRat {
    QRat::from_poly(q_number_base(n, k))
}

/// Convenience: the Gaussian binomial `[n, p]_q` as an element of Q(q).
pub fn qbin(n: i64, p: i64) -> QRat {
    QRat::from_poly(q_binomial(n, p))
}

/// Parses a plain rational like `2/3` or `-5`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    s.trim().parse().ok()
}
