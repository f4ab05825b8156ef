//! Exact arithmetic: integer polynomials in `q, t`, rational polynomials and
//! rational functions in `q`, q-analogs, and truncated power series.

pub mod bipoly;
pub mod qanalog;
pub mod ratfunc;
pub mod ratpoly;
pub mod series;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgebraError;

pub use bipoly::BivariatePolynomial;
pub use qanalog::{q_binomial, q_binomial_by_division, q_factorial, q_integer, t_bracket};
pub use ratfunc::RationalFunctionQ;
pub use ratpoly::RatPoly;
pub use series::{coefficient_as_polynomial, Field, TruncatedSeries, DEFAULT_SERIES_ORDER};

/// Always `p/q`, including integers (`3/1`).
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let err = || AlgebraError::ParseRational {
        value: s.to_string(),
    };
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d == BigInt::from(0) {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}
