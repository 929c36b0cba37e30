//! Exact arithmetic substrate for the dimer toolkit.
//!
//! Provides bivariate Laurent polynomials over arbitrary-precision integers
//! ([`LaurentPoly2`]), truncated univariate power series over an exact
//! coefficient ring ([`PowerSeries1`]), and rational-function series expansion
//! ([`series_of_rational`]). Everything here is exact; floating point never
//! appears in this crate.

mod poly;
mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use poly::{LaurentPoly2, PolyError};
pub use series::{series_of_rational, Coeff, FieldCoeff, PowerSeries1, SeriesError};

/// Convenience: an exact rational from an integer pair (`p/q`), panicking on `q = 0`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
