//! Truncated Volkenborn-style sums and their p-adic convergence.
//!
//! Two exact sequences of rationals are computed:
//!
//! * **zero mode** — `S_N = p^{-N} Σ_{x=0}^{p^N - 1} x^n`, which converges
//!   p-adically to the Bernoulli number `B_n` for every prime `p`;
//! * **fermionic mode** — `T_N = Σ_{x=0}^{p^N - 1} (-1)^x x^n`, which
//!   converges p-adically to the Euler number `E_n(0)` for odd primes
//!   (the alternating sign pattern needs `p^N` odd to tile consistently).
//!
//! Convergence is witnessed by the p-adic valuation of `S_N - B_n`
//! (resp. `T_N - E_n`): the valuations are nondecreasing in the depth `N`
//! and grow without bound. Everything here is exact integer arithmetic —
//! no floats are involved at any point.
//!
//! The same power sums also close the finite-sum bridges used elsewhere:
//! `Σ_{x<M} x^n = (B_{n+1}(M) - B_{n+1})/(n+1)` for every `M`, and
//! `Σ_{x<M} (-1)^x x^n = (E_n(0) + E_n(M))/2` for odd `M`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::classical;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Which truncated sum to study.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QMode {
    /// `p^{-N} Σ_{x < p^N} x^n` → Bernoulli numbers.
    Zero,
    /// `Σ_{x < p^N} (-1)^x x^n` → Euler numbers (odd `p` only).
    Fermionic,
}

impl QMode {
    pub fn tag(self) -> &'static str {
        match self {
            QMode::Zero => "zero",
            QMode::Fermionic => "fermionic",
        }
    }
}

/// A convergence study: prime, exponent, truncation depth range, mode.
#[derive(Clone, Copy, Debug)]
pub struct PadicConfig {
    pub prime: u64,
    pub n: u32,
    pub depth_max: u32,
    pub mode: QMode,
}

impl PadicConfig {
    /// Reject non-primes, the even prime in fermionic mode, and depth
    /// ranges whose truncation point `p^depth_max` does not fit in `u64`.
    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.prime) {
            return Err(Error::BadPrime(self.prime));
        }
        if self.mode == QMode::Fermionic && self.prime == 2 {
            return Err(Error::EvenFermionicPrime(self.prime));
        }
        if self.depth_max == 0 {
            return Err(Error::DepthOutOfRange { depth: 0, max: max_depth(self.prime) });
        }
        if self.prime.checked_pow(self.depth_max).is_none() {
            return Err(Error::DepthOutOfRange {
                depth: self.depth_max,
                max: max_depth(self.prime),
            });
        }
        Ok(())
    }
}

/// One row of a convergence table.
#[derive(Clone, Debug)]
pub struct ConvergencePoint {
    /// Truncation depth `N` (the sum runs over `x < p^N`).
    pub depth: u32,
    /// The exact truncated sum.
    pub sum: Rational,
    /// `v_p(sum - limit)`; `None` encodes `+∞` (the truncation is already
    /// exactly the limit).
    pub valuation: Option<i64>,
}

/// `Σ_{x=0}^{m-1} x^n` as an exact natural number (with `0^0 = 1`).
pub fn power_sum(m: u64, n: u32) -> BigUint {
    let mut acc = BigUint::zero();
    for x in 0..m {
        acc += BigUint::from(x).pow(n);
    }
    acc
}

/// `Σ_{x=0}^{m-1} (-1)^x x^n` as an exact integer (with `0^0 = 1`).
pub fn alternating_power_sum(m: u64, n: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for x in 0..m {
        let term = BigInt::from(x).pow(n);
        if x % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The truncated sum at one depth.
pub fn volkenborn_truncated(cfg: &PadicConfig, depth: u32) -> Result<Rational> {
    cfg.validate()?;
    if depth == 0 || depth > cfg.depth_max {
        return Err(Error::DepthOutOfRange { depth, max: cfg.depth_max });
    }
    let modulus = cfg
        .prime
        .checked_pow(depth)
        .expect("depth validated against u64 range");
    Ok(match cfg.mode {
        QMode::Zero => Rational::new(
            BigInt::from(power_sum(modulus, cfg.n)),
            BigInt::from(modulus),
        ),
        QMode::Fermionic => Rational::from_integer(alternating_power_sum(modulus, cfg.n)),
    })
}

/// Full convergence table for depths `1..=depth_max`, sharing one pass over
/// `x < p^{depth_max}` so deeper rows reuse the shallower partial sums.
pub fn padic_convergence(cfg: &PadicConfig) -> Result<Vec<ConvergencePoint>> {
    cfg.validate()?;
    let limit = match cfg.mode {
        QMode::Zero => classical::bernoulli_number(cfg.n as usize),
        QMode::Fermionic => classical::euler_number(cfg.n as usize),
    };
    let mut points = Vec::with_capacity(cfg.depth_max as usize);
    let mut acc = BigInt::zero();
    let mut x: u64 = 0;
    for depth in 1..=cfg.depth_max {
        let bound = cfg
            .prime
            .checked_pow(depth)
            .expect("depth validated against u64 range");
        while x < bound {
            let term = BigInt::from(x).pow(cfg.n);
            match cfg.mode {
                QMode::Zero => acc += term,
                QMode::Fermionic => {
                    if x.is_multiple_of(2) {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            x += 1;
        }
        let sum = match cfg.mode {
            QMode::Zero => Rational::new(acc.clone(), BigInt::from(bound)),
            QMode::Fermionic => Rational::from_integer(acc.clone()),
        };
        let gap = &sum - &limit;
        points.push(ConvergencePoint {
            depth,
            sum,
            valuation: valuation(&gap, cfg.prime),
        });
    }
    Ok(points)
}

/// p-adic valuation of a rational: `v_p(a/b) = v_p(a) - v_p(b)`, with
/// `None` standing for `v_p(0) = +∞`.
pub fn valuation(r: &Rational, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    Some(int_valuation(&r.numer().abs().to_biguint().unwrap(), &p)
        - int_valuation(&r.denom().abs().to_biguint().unwrap(), &p))
}

fn int_valuation(value: &BigUint, p: &BigUint) -> i64 {
    debug_assert!(!value.is_zero());
    let mut v = 0i64;
    let mut rest = value.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        rest = q;
        v += 1;
    }
}

/// Deterministic trial-division primality — the primes in play are tiny.
fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Largest depth for which `p^depth` fits in `u64`.
fn max_depth(p: u64) -> u32 {
    if p < 2 {
        return 0;
    }
    let mut depth = 0u32;
    let mut acc = 1u64;
    while let Some(next) = acc.checked_mul(p) {
        acc = next;
        depth += 1;
    }
    depth
}
