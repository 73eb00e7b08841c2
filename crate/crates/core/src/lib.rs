//! SL2-plethysm coefficients and their generating functions.
//!
//! The central object is the bivariate series
//! `A_mu(z, q) = sum_{h, k} a_{mu[h]}^{[k]} q^k z^h`, where
//! `a_{mu[h]}^{[k]}` is the multiplicity of the q-integer `[k]_q` in
//! `s_mu[s_h](1/q, q)`. [`ptop::compute_a`] produces it as an exact rational
//! function; the other modules provide independent ways to get at the same
//! numbers and check them against each other.

pub mod algebra;
pub mod combinat;
pub mod error;
pub mod geometry;
pub mod glnp;
pub mod golden;
pub mod ptop;
pub mod qehr;
pub mod recip;
pub mod sl2;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients.
pub type QLaurent = algebra::Laurent<BigInt>;
/// Polynomial in `z` with [`QLaurent`] coefficients.
pub type ZQPoly = algebra::BivariatePoly<BigInt>;
/// [`ZQPoly`] over a product of `(1 - q^a z^b)^m`.
pub type FactoredRational = algebra::Factored<BigInt>;
/// Truncated power series in `z` with [`QLaurent`] coefficients.
pub type QSeries = algebra::Series<BigInt>;
/// Integer polynomial in one variable.
pub type IntPoly = algebra::UniPoly<BigInt>;
/// Rational polynomial in one variable.
pub type RatPoly = algebra::UniPoly<BigRational>;
