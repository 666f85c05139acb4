//! Floating-point and p-adic cross-checks of the moment representations.
//!
//! The exact layer establishes what the polynomials *are*; this layer checks
//! the probabilistic claims behind them along three independent routes:
//!
//! * [`quad`] — Gauss–Legendre quadrature of `∫ poly(x + ıt - 1/2) w(t) dt`
//!   against the logistic / hyperbolic-secant density `w`,
//! * [`mc`] — seeded inverse-CDF Monte Carlo estimation of the same moments
//!   and of the cancellation principle,
//! * [`padic`] — exact integer evaluation of truncated Volkenborn sums and
//!   the p-adic valuation of their distance to the limit.

pub mod density;
pub mod mc;
pub mod padic;
pub mod quad;

pub use density::DensityKind;
pub use mc::{cancellation_mc, mc_moment, McConfig, McEstimate};
pub use padic::{
    alternating_power_sum, padic_convergence, power_sum, valuation, volkenborn_truncated,
    ConvergencePoint, PadicConfig, QMode,
};
pub use quad::{
    charfun_check, quad_moment, quad_moment_auto, recentred_coeff_mass, tail_bound, QuadConfig,
    QuadMoment,
};

/// Kahan–Babuška compensated accumulator; the quadrature and Monte Carlo
/// sums run far past the point where naive f64 accumulation would eat the
/// acceptance tolerance.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[cfg(test)]
mod tests {
    use super::Kahan;

    #[test]
    fn kahan_recovers_cancelled_bits() {
        let mut acc = Kahan::default();
        // 1 + 2^-60 repeated: naive summation loses every increment.
        acc.add(1.0);
        for _ in 0..1_000_000 {
            acc.add(8.673617379884035e-19);
        }
        let expected = 1.0 + 1e6 * 8.673617379884035e-19;
        assert!((acc.value() - expected).abs() < 1e-18);
    }
}
