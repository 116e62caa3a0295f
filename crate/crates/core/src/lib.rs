//! Exact connection formulae between Fibonacci polynomials and Chebyshev
//! polynomials of the first and second kinds.
//!
//! Every coefficient in this crate is an exact rational. The polynomial and
//! sequence layers are generic over any [`Scalar`] ring (so they also run over
//! `f64` or Gaussian rationals), while the hypergeometric, connection and
//! verification layers are pinned to [`Rational`] because they need to decide
//! exact equality.
//!
//! Module map:
//!
//! * [`scalar`]: binomials, Pochhammer symbols, half-integer Gamma ratios and
//!   `p/q` string forms.
//! * [`poly`]: dense univariate polynomials.
//! * [`sequences`]: `F_n`, `T_n`, `U_n` by recurrence and by power form, Fibonacci
//!   numbers and derivative values at `x = 1`.
//! * [`hypergeom`]: terminating Gauss `2F1` series and the Pfaff transformation.
//! * [`connection`]: the four connection formulae, the `d_{j,m}` recurrence and
//!   an elimination-based change-of-basis oracle.
//! * [`identities`]: verifiers for the derived Fibonacci-number, complex,
//!   Laurent, trigonometric and derivative identities.
//! * [`integrals`]: weighted integrals as exact multiples of pi, with a
//!   Gauss-Chebyshev quadrature cross-check.

pub mod connection;
pub mod error;
mod fixed;
pub mod hypergeom;
pub mod identities;
pub mod integrals;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod sequences;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;
/// Canonical arbitrary-precision rational (`denominator > 0`, reduced).
pub type Rational = num_rational::BigRational;
/// Complex number with exact rational parts.
pub type Gaussian = num_complex::Complex<Rational>;
/// Polynomial with exact rational coefficients.
pub type RationalPoly = poly::Polynomial<Rational>;
/// Polynomial with `f64` coefficients.
pub type FloatPoly = poly::Polynomial<f64>;

pub use connection::{expand, oracle_expand, CoefficientExpansion, ConnectionDirection};
pub use hypergeom::Hypergeom2F1;
pub use integrals::{ChebyshevWeight, PiMultiple};
pub use report::{IdentityId, IdentityReport, Status};
pub use sequences::SequenceKind;
