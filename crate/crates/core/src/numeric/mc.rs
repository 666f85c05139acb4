//! Seeded Monte Carlo estimation of the probabilistic representations.
//!
//! Sampling is inverse-CDF on open-interval uniforms from a `ChaCha8`
//! stream, so a `(seed, samples)` pair fully determines every draw and the
//! whole estimate is bit-for-bit reproducible. Accumulation is blocked and
//! compensated; there is no parallelism and no platform-dependent maths in
//! the summation path.

use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::numeric::density::DensityKind;
use crate::numeric::Kahan;
use crate::poly::{ComplexVal, Poly};
use crate::rational::{rational_to_f64, Rational};

/// Sample count and stream seed for one estimation run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
}

/// Point estimate with its standard error.
#[derive(Clone, Copy, Debug)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
}

const BLOCK: u64 = 1 << 16;

/// Monte Carlo estimate of `E[Re poly(x + ıT - 1/2)]` where `T` follows the
/// given law. For the monomial `u^n` this converges to the degree-`n`
/// Bernoulli (logistic) or Euler (secant) polynomial at `x`.
pub fn mc_moment(
    kind: DensityKind,
    poly: &Poly,
    x: &Rational,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let centre = rational_to_f64(x) - 0.5;
    run(cfg, |rng| {
        let t = kind.inverse_cdf(unit_open(rng.next_u64()));
        poly.eval_complex(ComplexVal::new(centre, t)).re
    })
}

/// Monte Carlo check of the cancellation principle: adding the law's
/// conjugate companion `U` (uniform on `(0,1)` for the logistic law, a fair
/// Bernoulli on `{0,1}` for the secant law) collapses the moment back to the
/// plain power, i.e. `E[(x + ıT - 1/2 + U)^n] = x^n`.
pub fn cancellation_mc(
    kind: DensityKind,
    n: u32,
    x: &Rational,
    cfg: &McConfig,
) -> Result<McEstimate> {
    let centre = rational_to_f64(x) - 0.5;
    run(cfg, |rng| {
        let t = kind.inverse_cdf(unit_open(rng.next_u64()));
        let u = match kind {
            DensityKind::Logistic => unit_open(rng.next_u64()),
            DensityKind::Sech => (rng.next_u64() >> 63) as f64,
        };
        ComplexVal::new(centre + u, t).powu(n).re
    })
}

fn run(cfg: &McConfig, mut draw: impl FnMut(&mut ChaCha8Rng) -> f64) -> Result<McEstimate> {
    if cfg.samples < 2 {
        return Err(Error::TooFewSamples(cfg.samples));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut total = Kahan::default();
    let mut total_sq = Kahan::default();
    let mut remaining = cfg.samples;
    while remaining > 0 {
        let chunk = remaining.min(BLOCK);
        let mut block = Kahan::default();
        let mut block_sq = Kahan::default();
        for _ in 0..chunk {
            let y = draw(&mut rng);
            block.add(y);
            block_sq.add(y * y);
        }
        total.add(block.value());
        total_sq.add(block_sq.value());
        remaining -= chunk;
    }
    let n = cfg.samples.to_f64().expect("sample count fits in f64");
    let mean = total.value() / n;
    let variance = ((total_sq.value() - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate {
        estimate: mean,
        std_error: (variance / n).sqrt(),
    })
}

/// Map a raw 64-bit word to the open interval (0, 1): take the top 52 bits
/// and centre them on the dyadic grid, so neither endpoint is reachable and
/// the quantile transforms stay finite. (52 bits, not 53: `2^53 - 1 + 0.5`
/// would round up to `2^53` and the top word would map to exactly 1.)
fn unit_open(word: u64) -> f64 {
    ((word >> 12) as f64 + 0.5) * (1.0 / 4503599627370496.0)
}
