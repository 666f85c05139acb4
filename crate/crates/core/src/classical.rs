//! Bernoulli and Euler polynomials from their averaging characterisations.
//!
//! `bernoulli_poly(n)` is the unique monic degree-`n` polynomial whose
//! sliding unit average reproduces the monomial,
//!
//! ```text
//! ∫_0^1 B_n(x + u) du = x^n,
//! ```
//!
//! and `euler_poly(n)` is the unique monic degree-`n` polynomial whose
//! two-point average does the same,
//!
//! ```text
//! (E_n(x) + E_n(x + 1)) / 2 = x^n.
//! ```
//!
//! Both characterisations are triangular in the coefficients, so each
//! polynomial is produced by a back-substitution solve over exact rationals.
//! Solutions are memoized process-wide; an independent recurrence route lives
//! in [`crate::oracle`] so the two implementations can cross-check each
//! other in tests.

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::RwLock;

use crate::combin::binomial;
use crate::poly::Poly;
use crate::rational::{rat_int, Rational};

static BERNOULLI: Lazy<RwLock<Vec<Poly>>> = Lazy::new(|| RwLock::new(Vec::new()));
static EULER: Lazy<RwLock<Vec<Poly>>> = Lazy::new(|| RwLock::new(Vec::new()));

/// The Bernoulli polynomial `B_n(x)`.
pub fn bernoulli_poly(n: usize) -> Poly {
    cached(&BERNOULLI, n, solve_bernoulli)
}

/// The Euler polynomial `E_n(x)`.
pub fn euler_poly(n: usize) -> Poly {
    cached(&EULER, n, solve_euler)
}

/// The Bernoulli number `B_n = B_n(0)`.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_poly(n).coeff(0)
}

/// The Euler polynomial at zero, `E_n(0)` (the Appell sequence of moments
/// generated by `2 / (e^t + 1)`; not the integer secant numbers `E_n(1/2)`).
pub fn euler_number(n: usize) -> Rational {
    euler_poly(n).coeff(0)
}

fn cached(cache: &RwLock<Vec<Poly>>, n: usize, solve: fn(usize) -> Poly) -> Poly {
    {
        let read = cache.read().unwrap();
        if let Some(p) = read.get(n) {
            return p.clone();
        }
    }
    let mut write = cache.write().unwrap();
    while write.len() <= n {
        let next = solve(write.len());
        write.push(next);
    }
    write[n].clone()
}

/// Back-substitution for the sliding-average characterisation.
///
/// Matching the coefficient of `x^r` in `∫_0^1 p(x+u) du = x^n` gives the
/// triangular system `Σ_{i≥r} c_i C(i+1, r) / (i+1) = [r = n]`.
fn solve_bernoulli(n: usize) -> Poly {
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    for r in (0..n).rev() {
        let mut sum = Rational::zero();
        for (i, ci) in c.iter().enumerate().skip(r + 1) {
            sum += ci * binomial(i as u64 + 1, r as u64) / rat_int(i as i64 + 1);
        }
        c[r] = -sum;
    }
    Poly::new(c)
}

/// Back-substitution for the two-point-average characterisation.
///
/// Matching the coefficient of `x^r` in `(p(x) + p(x+1)) / 2 = x^n` gives
/// `c_r = -(1/2) Σ_{i>r} c_i C(i, r)` below the leading term.
fn solve_euler(n: usize) -> Poly {
    let half = Rational::new(1.into(), 2.into());
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    for r in (0..n).rev() {
        let mut sum = Rational::zero();
        for (i, ci) in c.iter().enumerate().skip(r + 1) {
            sum += ci * binomial(i as u64, r as u64);
        }
        c[r] = -sum * &half;
    }
    Poly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn first_bernoulli_polys_match_closed_forms() {
        assert_eq!(bernoulli_poly(0), Poly::one());
        assert_eq!(bernoulli_poly(1), Poly::new(vec![rat(-1, 2), rat(1, 1)]));
        assert_eq!(
            bernoulli_poly(2),
            Poly::new(vec![rat(1, 6), rat(-1, 1), rat(1, 1)])
        );
        assert_eq!(
            bernoulli_poly(3),
            Poly::new(vec![rat(0, 1), rat(1, 2), rat(-3, 2), rat(1, 1)])
        );
    }

    #[test]
    fn first_euler_polys_match_closed_forms() {
        assert_eq!(euler_poly(0), Poly::one());
        assert_eq!(euler_poly(1), Poly::new(vec![rat(-1, 2), rat(1, 1)]));
        assert_eq!(euler_poly(2), Poly::new(vec![rat(0, 1), rat(-1, 1), rat(1, 1)]));
        assert_eq!(
            euler_poly(3),
            Poly::new(vec![rat(1, 4), rat(0, 1), rat(-3, 2), rat(1, 1)])
        );
    }

    #[test]
    fn defining_averages_reproduce_monomials() {
        for n in 0..=12 {
            let b = bernoulli_poly(n);
            // ∫_0^1 B_n(x+u) du = F(x+1) - F(x) with F the antiderivative.
            let f = b.integral();
            let avg = &f.shift(&rat_int(1)) - &f;
            assert_eq!(avg, Poly::monomial(n), "sliding average at n = {n}");

            let e = euler_poly(n);
            let two_point = (&e + &e.shift(&rat_int(1))).scale(&rat(1, 2));
            assert_eq!(two_point, Poly::monomial(n), "two-point average at n = {n}");
        }
    }

    #[test]
    fn known_number_values() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
        let expected_euler = [
            rat(1, 1),
            rat(-1, 2),
            rat(0, 1),
            rat(1, 4),
            rat(0, 1),
            rat(-1, 2),
        ];
        for (n, e) in expected_euler.iter().enumerate() {
            assert_eq!(&euler_number(n), e, "E_{n}(0)");
        }
    }

    #[test]
    fn structural_invariants() {
        for n in 0..=20 {
            let b = bernoulli_poly(n);
            assert_eq!(b.degree(), Some(n));
            assert_eq!(b.leading(), Some(&rat(1, 1)));
            let e = euler_poly(n);
            assert_eq!(e.degree(), Some(n));
            assert_eq!(e.leading(), Some(&rat(1, 1)));
            if n >= 3 && n % 2 == 1 {
                assert_eq!(bernoulli_number(n), rat(0, 1), "odd B_{n}");
            }
            if n >= 2 && n % 2 == 0 {
                assert_eq!(euler_number(n), rat(0, 1), "even E_{n}(0)");
            }
        }
    }
}
