//! Independent reference route for the classical polynomials.
//!
//! [`crate::classical`] produces Bernoulli and Euler polynomials from their
//! averaging characterisations by triangular solve.  This module derives the
//! same objects along a completely different path — the textbook number
//! recurrences followed by the Appell binomial expansion — so tests can pit
//! the two implementations against each other.  Nothing here is used by the
//! production code paths.

use num_traits::{One, Zero};

use crate::combin::binomial;
use crate::poly::Poly;
use crate::rational::{rat, rat_int, Rational};

/// Bernoulli numbers `B_0..=B_{n_max}` from the defining sum
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0` for `n ≥ 1`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let mut numbers: Vec<Rational> = Vec::with_capacity(n_max + 1);
    numbers.push(Rational::one());
    for n in 1..=n_max {
        let mut sum = Rational::zero();
        for (j, b) in numbers.iter().enumerate() {
            sum += binomial(n as u64 + 1, j as u64) * b;
        }
        numbers.push(-sum / rat_int(n as i64 + 1));
    }
    numbers
}

/// Euler zero-values `E_0(0)..=E_{n_max}(0)` from the complementary sum
/// `E_n(0) + E_n(1) = 2·[n = 0]` expanded through the Appell relation.
pub fn euler_numbers(n_max: usize) -> Vec<Rational> {
    let mut numbers: Vec<Rational> = Vec::with_capacity(n_max + 1);
    numbers.push(Rational::one());
    for n in 1..=n_max {
        let mut sum = Rational::zero();
        for (k, e) in numbers.iter().enumerate() {
            sum += binomial(n as u64, k as u64) * e;
        }
        numbers.push(-sum * rat(1, 2));
    }
    numbers
}

/// `B_n(x) = Σ_k C(n, k) B_k x^{n-k}` assembled from the number recurrence.
pub fn bernoulli_poly(n: usize) -> Poly {
    appell(n, &bernoulli_numbers(n))
}

/// `E_n(x) = Σ_k C(n, k) E_k(0) x^{n-k}` assembled from the number
/// recurrence.
pub fn euler_poly(n: usize) -> Poly {
    appell(n, &euler_numbers(n))
}

fn appell(n: usize, numbers: &[Rational]) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, b) in numbers.iter().enumerate().take(n + 1) {
        // C(n, k) B_k contributes to the x^{n-k} coefficient.
        coeffs[n - k] = binomial(n as u64, k as u64) * b;
    }
    Poly::new(coeffs)
}
