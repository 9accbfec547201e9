//! Exact rational scalars and their canonical text form.
//!
//! Every scalar in this crate is a `BigRational`. The text form is strict:
//! `p` for integers, `p/q` otherwise, always in lowest terms with a positive
//! denominator and ASCII `-` for negatives. Parsing rejects anything else so
//! that a value survives a write/read round trip byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction n/d. Panics if d is zero.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational in canonical form: `p` or `p/q`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical form produced by [`format_rational`].
///
/// Accepts `p` and `p/q` where p and q are decimal integers, with at most one
/// leading `-` on p. Rejects empty parts, `+`, whitespace, and a zero
/// denominator. The result is reduced, so `2/4` parses to the same value as
/// `1/2`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(text.to_string());
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(num_text).ok_or_else(bad)?;
    let denom = match den_text {
        Some(d) => {
            let d = parse_unsigned(d).ok_or_else(bad)?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(BigRational::new(numer, denom))
}

fn parse_int(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    let magnitude = parse_unsigned(digits)?;
    Some(if text.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

fn parse_unsigned(text: &str) -> Option<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}
