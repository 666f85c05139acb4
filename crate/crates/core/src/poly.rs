//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored low-to-high with trailing zeros trimmed, so the
//! zero polynomial is the empty coefficient list and every nonzero polynomial
//! has a nonzero leading coefficient.  The canonical text form lists the
//! coefficients low-to-high in brackets, e.g. `[1/6, -1, 1]` for
//! `x^2 - x + 1/6` and `[]` for zero.

use num_complex::Complex64;
use num_traits::{One, Zero};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, rat_int, rat_pow, rational_to_f64, Rational};

/// Complex double-precision value used by the numeric cross-checks.
pub type ComplexVal = Complex64;

/// Dense exact polynomial in one variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from machine integers (used heavily in tests).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        Poly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Low-to-high coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `q` for the variable: returns `self(q(x))`.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * q;
            acc = &acc + &Poly::constant(c.clone());
        }
        acc
    }

    /// Argument shift: returns `self(x + c)`.
    pub fn shift(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        self.compose(&Poly::new(vec![c.clone(), Rational::one()]))
    }

    /// Argument dilation: returns `self(s * x)`.
    pub fn scale_arg(&self, s: &Rational) -> Poly {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * &power;
                power *= s;
                scaled
            })
            .collect();
        Poly::new(coeffs)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Double-precision complex evaluation by Horner's rule.
    pub fn eval_complex(&self, z: ComplexVal) -> ComplexVal {
        let mut acc = ComplexVal::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + rational_to_f64(c);
        }
        acc
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int(i as i64 + 1));
        }
        Poly::new(coeffs)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Poly::new(coeffs)
    }

    /// Repeated-multiplication power.
    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: `Ok(q)` with `self = q * divisor` when the remainder
    /// vanishes, [`Error::InexactDivision`] otherwise.
    ///
    /// # Panics
    /// Panics when `divisor` is the zero polynomial.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let lead = divisor.leading().expect("division by the zero polynomial");
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let quot_len = rem.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![Rational::zero(); quot_len];
        for i in (0..quot_len).rev() {
            let q = &rem[i + divisor.coeffs.len() - 1] / lead;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let sub = &q * d;
                    rem[i + j] -= sub;
                }
            }
            quot[i] = q;
        }
        if rem.iter().all(Rational::is_zero) {
            Ok(Poly::new(quot))
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Largest power of the variable dividing `self` (0 for the zero
    /// polynomial).
    pub fn valuation_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rational::format_rational(c))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(text: &str) -> Result<Poly> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::ParseRational(text.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// `(c0 + c1 x)^e` helper: builds a linear polynomial from integer
/// coefficients.
pub fn linear(c0: i64, c1: i64) -> Poly {
    Poly::from_ints(&[c0, c1])
}

/// Scales the argument by a nonzero rational and the value by its `n`-th
/// power: returns `s^n * p(x / s)`.
pub fn conjugate_dilation(p: &Poly, s: &Rational, n: i64) -> Poly {
    p.scale_arg(&s.recip()).scale(&rat_pow(s, n))
}
