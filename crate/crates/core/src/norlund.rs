//! Higher-order Nörlund polynomials with rational parameter vectors.
//!
//! For a parameter vector `a = (a_1, ..., a_k)` of nonzero rationals, the
//! order-`k` Bernoulli polynomial `B_n^(k)(x | a)` has exponential generating
//! function
//!
//! ```text
//! Π_j (a_j t / (e^{a_j t} - 1)) · e^{x t},
//! ```
//!
//! and the order-`k` Euler polynomial `E_n^(k)(x | a)` replaces each factor
//! by `2 / (e^{a_j t} + 1)`.  The empty vector (`k = 0`) makes both families
//! collapse to the plain monomials `x^n`.
//!
//! Number tables (the `x = 0` values) are built by binomial convolution of
//! the single-parameter sequences `a^m B_m` resp. `a^m E_m(0)` and memoized
//! per `(family, parameter vector)`; polynomials follow from the Appell
//! expansion in `x`.

use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use crate::classical;
use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{format_rational, parse_rational, Rational};

/// Which Appell family a Nörlund object belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NorlundKind {
    Bernoulli,
    Euler,
}

impl NorlundKind {
    /// One-letter tag used in command output (`b` / `e`).
    pub fn tag(self) -> &'static str {
        match self {
            NorlundKind::Bernoulli => "b",
            NorlundKind::Euler => "e",
        }
    }
}

/// Validated vector of nonzero rational parameters.
///
/// The canonical text form is comma-separated canonical rationals with no
/// spaces, e.g. `2,-1/3,1`; the empty vector prints as the empty string.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamVec {
    entries: Vec<Rational>,
}

impl ParamVec {
    /// Builds a parameter vector, rejecting zero entries (a zero parameter
    /// degenerates the generating function).
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.iter().any(Rational::is_zero) {
            return Err(Error::ZeroParameter);
        }
        Ok(ParamVec { entries })
    }

    /// The empty (order-zero) vector.
    pub fn empty() -> Self {
        ParamVec { entries: Vec::new() }
    }

    /// The all-ones vector of length `k` (classical higher-order case).
    pub fn ones(k: usize) -> Self {
        ParamVec {
            entries: vec![Rational::one(); k],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// The first `k` entries as a new vector (`k ≤ len`).
    pub fn prefix(&self, k: usize) -> ParamVec {
        ParamVec {
            entries: self.entries[..k].to_vec(),
        }
    }

    /// Sum of the entries (zero for the empty vector).
    pub fn sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Product of the entries (one for the empty vector).
    pub fn product(&self) -> Rational {
        self.entries.iter().product()
    }
}

impl fmt::Display for ParamVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(a))?;
        }
        Ok(())
    }
}

impl FromStr for ParamVec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(ParamVec::empty());
        }
        let entries = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::ParseParamVec(text.to_string()))?;
        ParamVec::new(entries)
    }
}

/// Memoized table of Nörlund numbers `B_n^(k)(0 | a)` or `E_n^(k)(0 | a)`.
#[derive(Clone, Debug)]
pub struct NorlundTable {
    pub kind: NorlundKind,
    pub params: ParamVec,
    numbers: Vec<Rational>,
}

impl NorlundTable {
    /// The `n`-th number; `n` must be within the table length.
    pub fn number(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }
}

/// Memoized number tables, keyed by family and parameter vector.
type TableCache = HashMap<(NorlundKind, ParamVec), Vec<Rational>>;

static TABLES: Lazy<Mutex<TableCache>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Number table for `0..=n_max`, computed by convolving the one-parameter
/// factor sequences and memoized per `(kind, params)`.
pub fn norlund_numbers(kind: NorlundKind, params: &ParamVec, n_max: usize) -> NorlundTable {
    let key = (kind, params.clone());
    {
        let tables = TABLES.lock().unwrap();
        if let Some(cached) = tables.get(&key) {
            if cached.len() > n_max {
                return NorlundTable {
                    kind,
                    params: params.clone(),
                    numbers: cached[..=n_max].to_vec(),
                };
            }
        }
    }
    let numbers = convolve_factors(kind, params, n_max);
    let mut tables = TABLES.lock().unwrap();
    let entry = tables.entry(key).or_default();
    if entry.len() < numbers.len() {
        *entry = numbers.clone();
    }
    NorlundTable {
        kind,
        params: params.clone(),
        numbers,
    }
}

/// The polynomial `B_n^(k)(x | a)` / `E_n^(k)(x | a)` via the Appell
/// expansion `Σ_l C(n, l) N_{n-l} x^l` over the number table `N`.
pub fn norlund_poly(kind: NorlundKind, params: &ParamVec, n: usize) -> Poly {
    let table = norlund_numbers(kind, params, n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (l, c) in coeffs.iter_mut().enumerate() {
        *c = binomial(n as u64, l as u64) * table.number(n - l);
    }
    Poly::new(coeffs)
}

/// EGF coefficient sequence of a single factor: `a^m B_m` or `a^m E_m(0)`.
fn factor_sequence(kind: NorlundKind, a: &Rational, n_max: usize) -> Vec<Rational> {
    let mut power = Rational::one();
    (0..=n_max)
        .map(|m| {
            let base = match kind {
                NorlundKind::Bernoulli => classical::bernoulli_number(m),
                NorlundKind::Euler => classical::euler_number(m),
            };
            let value = base * &power;
            power *= a;
            value
        })
        .collect()
}

fn convolve_factors(kind: NorlundKind, params: &ParamVec, n_max: usize) -> Vec<Rational> {
    // The empty product has EGF 1: the sequence (1, 0, 0, ...).
    let mut acc = vec![Rational::zero(); n_max + 1];
    acc[0] = Rational::one();
    for a in params.entries() {
        let factor = factor_sequence(kind, a, n_max);
        acc = egf_convolve(&acc, &factor);
    }
    acc
}

/// Binomial (EGF) convolution: `c_n = Σ_i C(n, i) u_i v_{n-i}`.
fn egf_convolve(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n_max = u.len() - 1;
    (0..=n_max)
        .map(|n| {
            let mut sum = Rational::zero();
            for i in 0..=n {
                if u[i].is_zero() || v[n - i].is_zero() {
                    continue;
                }
                sum += binomial(n as u64, i as u64) * &u[i] * &v[n - i];
            }
            sum
        })
        .collect()
}
