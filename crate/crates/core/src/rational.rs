//! Exact rational scalars and their text form `p/q` (or a bare integer `p`).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

/// Exact arbitrary-precision rational. Always stored reduced with a
/// positive denominator (guaranteed by `num::BigRational`).
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `p/q` or a bare integer `p`. The sign goes on the numerator.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let parse_int = |s: &str| -> Result<BigInt, RationalParseError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| RationalParseError::BadInteger(s.trim().to_string()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(RationalParseError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn rational_from_i64(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

pub fn rational_from_pair(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign classification used when splitting a diagonal into inertia counts.
pub fn sign_of(r: &Rational) -> std::cmp::Ordering {
    if r.is_zero() {
        std::cmp::Ordering::Equal
    } else if r.is_positive() {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Less
    }
}
