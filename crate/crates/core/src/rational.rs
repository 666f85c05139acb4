//! Arbitrary-precision rational scalars and their canonical text form.
//!
//! Every exact quantity in this crate is a [`Rational`]: a reduced fraction of
//! arbitrary-precision integers with a positive denominator.  The canonical
//! text form is `numerator/denominator` with the `/denominator` part
//! suppressed when the value is an integer, e.g. `-691/2730`, `3`, `0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational scalar (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

/// Shorthand constructor from machine integers.
///
/// # Panics
/// Panics if `denom == 0`; intended for literals in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand constructor for integers.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `(-1)^exp` as a rational.
pub fn sign_pow(exp: u64) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Exact integer power with negative exponents allowed.
///
/// # Panics
/// Panics when `base` is zero and `exp` is negative.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let positive = if exp < 0 {
        assert!(!base.is_zero(), "zero base with negative exponent");
        base.recip()
    } else {
        base.clone()
    };
    let mut acc = Rational::one();
    let mut sq = positive;
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// Canonical text form: `p/q` reduced, `/1` suppressed.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses the canonical text form (surrounding whitespace tolerated).
///
/// Accepts `p` or `p/q` with integer `p`, `q` and `q != 0`; the result is
/// reduced and sign-normalised.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(bad());
    }
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        None => (trimmed, None),
        Some((n, d)) => (n, Some(d)),
    };
    let numer = BigInt::from_str(numer_text.trim()).map_err(|_| bad())?;
    let denom = match denom_text {
        None => BigInt::one(),
        Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Best-effort conversion to `f64` (exact values of moderate size round
/// normally; astronomically large magnitudes saturate to infinity).
pub fn rational_to_f64(value: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
