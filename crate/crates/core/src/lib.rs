//! Exact computer-algebra kernel for R(q), the central extension of a
//! q-deformed Heisenberg algebra.
//!
//! R(q) is the unital associative algebra on generators A, B with the single
//! assertion that `γ = AB - qBA` is central. The kernel works over the exact
//! coefficient field Q(q) and provides:
//!
//! - the free algebra on {A, B, C, γ} with the commutator bracket
//!   ([`freealg`]);
//! - a generic reduction-system engine with ambiguity enumeration and
//!   resolvability certificates — the computational Diamond Lemma
//!   ([`rewrite`]);
//! - the two confluent presentations of R(q), their bases, and the
//!   closed-form reordering identities ([`rqalg`]);
//! - the Lie-polynomial layer: the identity catalog, a bracket-closure
//!   oracle, and an exact decision procedure for membership in the Lie
//!   subalgebra generated by A and B ([`liepoly`]);
//! - a truncated ladder-operator representation over exact rationals, used
//!   as an independent numeric oracle ([`fockcheck`]);
//! - an expression parser and pretty-printer for the surface syntax
//!   ([`parse`]).
//!
//! Everything above the coefficient level is generic over [`Scalar`]; the
//! aliases below fix the two instantiations used throughout.

pub mod exactnum;
pub mod fockcheck;
pub mod freealg;
pub mod liepoly;
pub mod linalg;
pub mod parse;
pub mod rewrite;
pub mod rqalg;
mod scalar;

pub use scalar::Scalar;

/// Plain exact rational scalars (numerators and denominators of arbitrary
/// size), used for numeric evaluation at a fixed q.
pub type Rational = num_rational::BigRational;

/// The working coefficient field Q(q).
pub use exactnum::QRat;

/// An element of the free algebra over Q(q).
pub type Element = freealg::NcPoly<QRat>;

/// A normal form over Q(q) for one of the named reduction systems.
pub type Canonical = rewrite::CanonicalElement<QRat>;

/// A reduction system over Q(q).
pub type System = rewrite::ReductionSystem<QRat>;

/// A dense exact matrix over plain rationals, as used by the Fock oracle.
pub type RationalMatrix = linalg::Matrix<Rational>;
