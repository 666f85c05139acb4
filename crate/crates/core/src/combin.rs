//! Exact combinatorial coefficients.
//!
//! Binomials are computed by the incremental multiplicative formula, which
//! divides exactly at every step, and multinomials as telescoping products of
//! binomials.  All results are returned as [`Rational`] integers so they can
//! flow directly into rational polynomial arithmetic.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Binomial coefficient `C(n, k)` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> Rational {
    Rational::from_integer(BigInt::from(binomial_uint(n, k)))
}

fn binomial_uint(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // C(n-k+i, i) is an integer, so this division is exact.
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Multinomial coefficient `n! / (parts[0]! * ... * parts[r]!)`.
///
/// The parts must sum to `n`; anything else is a caller error and is
/// rejected rather than silently renormalised.
pub fn multinomial(n: u64, parts: &[u64]) -> Result<Rational> {
    let total: u64 = parts.iter().sum();
    if total != n {
        return Err(Error::MultinomialSum {
            expected: n,
            got: total,
        });
    }
    let mut acc = BigUint::one();
    let mut rem = n;
    for &p in parts {
        acc *= binomial_uint(rem, p);
        rem -= p;
    }
    Ok(Rational::from_integer(BigInt::from(acc)))
}

/// Falling factorial `n (n-1) ... (n-k+1)`, which vanishes for `k > n`.
pub fn falling_factorial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
    }
    Rational::from_integer(BigInt::from(acc))
}
