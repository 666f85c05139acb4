//! The two absolutely continuous laws whose moments reproduce the classical
//! polynomials.
//!
//! Both densities live on the whole real line, are even, and have a
//! characteristic function with a closed form:
//!
//! * **Logistic** (Bernoulli side): density `(π/2)·sech²(πt)`,
//!   characteristic function `E[e^{ıtL}] = (t/2)/sinh(t/2)`,
//!   quantile `F⁻¹(u) = atanh(2u - 1)/π`.
//! * **Hyperbolic secant** (Euler side): density `sech(πt)`,
//!   characteristic function `1/cosh(t/2)`,
//!   quantile `F⁻¹(u) = ln(tan(πu/2))/π`.
//!
//! The moment representations shift the argument by `x - 1/2` and walk the
//! polynomial up the imaginary axis, so callers evaluate at `x + ıt - 1/2`
//! with `t` drawn from (or integrated against) one of these laws.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Which real-line law drives a numeric check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DensityKind {
    /// `(π/2)·sech²(πt)` — the Bernoulli-side law.
    Logistic,
    /// `sech(πt)` — the Euler-side law.
    Sech,
}

impl DensityKind {
    /// Canonical lowercase tag, matching the CLI grammar.
    pub fn tag(self) -> &'static str {
        match self {
            DensityKind::Logistic => "logistic",
            DensityKind::Sech => "sech",
        }
    }

    /// Probability density at `t`.
    pub fn pdf(self, t: f64) -> f64 {
        match self {
            DensityKind::Logistic => {
                let s = sech(PI * t);
                0.5 * PI * s * s
            }
            DensityKind::Sech => sech(PI * t),
        }
    }

    /// Characteristic function `E[e^{ıtX}]` (real, by symmetry of the laws).
    ///
    /// Accepts any real `t`; the removable singularity of `(t/2)/sinh(t/2)`
    /// at the origin is filled with its limit `1`.
    pub fn charfun(self, t: f64) -> f64 {
        match self {
            DensityKind::Logistic => {
                let h = 0.5 * t;
                if h.abs() < 1e-8 {
                    // sinh(h)/h = 1 + h²/6 + O(h⁴); below 1e-8 the quadratic
                    // term is already under the f64 roundoff floor.
                    1.0 / (1.0 + h * h / 6.0)
                } else {
                    h / h.sinh()
                }
            }
            DensityKind::Sech => 1.0 / (0.5 * t).cosh(),
        }
    }

    /// Inverse cumulative distribution function on the open interval (0, 1).
    pub fn inverse_cdf(self, u: f64) -> f64 {
        debug_assert!(u > 0.0 && u < 1.0, "quantile called outside (0,1)");
        match self {
            DensityKind::Logistic => (2.0 * u - 1.0).atanh() / PI,
            DensityKind::Sech => (0.5 * PI * u).tan().ln() / PI,
        }
    }

    /// Exponential tail envelope: `pdf(t) ≤ amp·e^{-rate·|t|}` for all `t`.
    ///
    /// Logistic: `(π/2)sech²(πt) ≤ (π/2)·4e^{-2π|t|} = 2π·e^{-2π|t|}`.
    /// Secant: `sech(πt) ≤ 2e^{-π|t|}`.
    pub(crate) fn tail_rate(self) -> f64 {
        match self {
            DensityKind::Logistic => 2.0 * PI,
            DensityKind::Sech => PI,
        }
    }

    /// See [`Self::tail_rate`].
    pub(crate) fn tail_amp(self) -> f64 {
        match self {
            DensityKind::Logistic => 2.0 * PI,
            DensityKind::Sech => 2.0,
        }
    }
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DensityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "logistic" => Ok(DensityKind::Logistic),
            "sech" => Ok(DensityKind::Sech),
            other => Err(Error::BadQuadConfig(format!(
                "unknown density kind `{other}` (expected `logistic` or `sech`)"
            ))),
        }
    }
}

/// Hyperbolic secant that degrades gracefully to 0 instead of NaN when
/// `cosh` overflows.
fn sech(x: f64) -> f64 {
    let c = x.cosh();
    if c.is_infinite() {
        0.0
    } else {
        1.0 / c
    }
}
