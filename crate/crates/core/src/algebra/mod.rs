//! Exact arithmetic: Laurent polynomials in `q`, polynomials in `z` over
//! them, factored rational functions and truncated power series.
//!
//! All types are generic over a [`Coeff`] ring; the crate root fixes the
//! ring to [`num_bigint::BigInt`] through type aliases.

mod bivariate;
mod coeff;
mod display;
mod factored;
mod laurent;
mod parse;
mod series;
mod univariate;

pub use bivariate::BivariatePoly;
pub use coeff::Coeff;
pub use factored::{DenFactor, Factored, Inverted, ReducedRational};
pub use laurent::Laurent;
pub use series::Series;
pub use univariate::{cyclotomic, UniPoly};

/// Product of two rational functions; no cancellation is attempted.
pub fn rational_mul<C: Coeff>(r1: &Factored<C>, r2: &Factored<C>) -> Factored<C> {
    r1.mul(r2)
}

/// Equality of two rational functions.
pub fn rational_equal<C: Coeff>(r1: &Factored<C>, r2: &Factored<C>) -> bool {
    r1.equals(r2)
}

/// Power series coefficients of `z^0 .. z^m`.
pub fn series_expand<C: Coeff>(r: &Factored<C>, m: u32) -> Series<C> {
    r.series(m)
}

/// `r(1/z, 1/q)` as a signed monomial times a rational function.
pub fn invert_variables<C: Coeff>(r: &Factored<C>) -> Inverted<C> {
    r.invert_variables()
}

/// `r(z, 1)` in lowest terms.
pub fn specialize_q1<C: Coeff>(r: &Factored<C>) -> ReducedRational<C> {
    r.specialize_q1()
}

/// Serialises big integers as decimal strings, matching the coefficient
/// encoding of [`Factored::to_json`].
pub(crate) fn serialize_bigints<S: serde::Serializer>(
    v: &[num_bigint::BigInt],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
