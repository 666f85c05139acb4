//! Gauss–Legendre quadrature of the moment representations.
//!
//! The quantity under test is
//!
//! ```text
//! ∫_{-∞}^{∞} poly(x + ıt - 1/2) · w(t) dt
//! ```
//!
//! for a polynomial with rational coefficients and one of the two densities
//! `w` in [`super::density`]. The integral is truncated to `[-T, T]` and
//! evaluated with an `N`-point Gauss–Legendre rule. Truncation is only
//! accepted when a rigorous tail bound certifies that the discarded mass is
//! below the requested tolerance; configurations that cannot certify are
//! rejected *before* any integration happens.
//!
//! ## Tail bound
//!
//! Both densities satisfy `w(t) ≤ amp·e^{-rate·|t|}`. For a polynomial of
//! degree `n`, `|poly(x + ıt - 1/2)| ≤ C·(1+|t|)^n` with `C` the sum of
//! absolute coefficient values of the polynomial recentred at `x - 1/2`, so
//! the two-sided tail is at most
//!
//! ```text
//! 2·C·amp·∫_T^∞ (1+t)^n e^{-rate·t} dt,
//! ```
//!
//! and the integral on the right satisfies the exact recurrence
//! `J_0 = e^{-rate·T}/rate`,
//! `J_m = (1+T)^m·e^{-rate·T}/rate + (m/rate)·J_{m-1}`,
//! which is evaluated in closed form (every term positive, no cancellation).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use num_traits::Signed;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::numeric::density::DensityKind;
use crate::numeric::Kahan;
use crate::poly::{ComplexVal, Poly};
use crate::rational::{rat, rational_to_f64, Rational};

/// Explicit quadrature configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadConfig {
    /// Half-width `T` of the truncation window `[-T, T]`.
    pub truncation: f64,
    /// Number of Gauss–Legendre nodes.
    pub nodes: usize,
    /// Absolute tolerance the tail bound must certify.
    pub tol: f64,
}

impl QuadConfig {
    /// [`Self::auto_for_mass`] with unit coefficient mass — suitable for
    /// bounded integrands such as the characteristic-function check.
    pub fn auto(kind: DensityKind, deg_max: u32, tol: f64) -> Self {
        Self::auto_for_mass(kind, deg_max, 1.0, tol)
    }

    /// Pick a window and node count so that the certified tail is at most
    /// `tol/10` for any polynomial of degree ≤ `deg_max` whose recentred
    /// coefficient mass is at most `mass`, then size the rule with generous
    /// analyticity headroom.
    ///
    /// Both integrands extend to functions of `t` analytic in a strip
    /// (nearest poles of `sech`/`sech²` sit at `Im t = ±1/2`), so the GL
    /// error decays like `ρ^{-2N}` with `ρ` the Bernstein-ellipse parameter
    /// of that strip scaled to `[-T, T]`.
    pub fn auto_for_mass(kind: DensityKind, deg_max: u32, mass: f64, tol: f64) -> Self {
        let tol = if tol > 0.0 { tol } else { 1e-10 };
        let mass = if mass.is_finite() && mass > 1.0 { mass } else { 1.0 };
        let mut truncation: f64 = 4.0;
        while mass * tail_envelope_integral(kind, truncation, deg_max) > tol / 10.0
            && truncation < 300.0
        {
            truncation += 0.5;
        }
        // Ellipse kept strictly inside the pole strip Im t = ±1/2 (at 80% of
        // the distance, so the integrand stays bounded on it), scaled to the
        // window: semi-minor axis b, ρ = b + sqrt(1 + b²).
        let b = 0.4 / truncation;
        let rho = b + (1.0 + b * b).sqrt();
        // Target ρ^{-2N} ≈ tol·1e-5 relative to the integrand scale `mass`.
        let digits = (mass / (tol * 1e-5)).ln();
        let nodes = ((digits / (2.0 * rho.ln())).ceil() as usize + 64).clamp(64, 8192);
        QuadConfig { truncation, nodes, tol }
    }

    /// Reject impossible or uncertified configurations.
    ///
    /// `coeff_mass` is the sum of absolute values of the coefficients of the
    /// integrand polynomial recentred at the evaluation point; the certified
    /// truncation error is `coeff_mass` times the unit-mass tail bound.
    pub fn validate(&self, kind: DensityKind, deg_max: u32, coeff_mass: f64) -> Result<()> {
        if !self.truncation.is_finite() || self.truncation <= 0.0 {
            return Err(Error::BadQuadConfig(format!(
                "truncation window must be positive and finite, got {}",
                self.truncation
            )));
        }
        if self.nodes < 2 {
            return Err(Error::BadQuadConfig(format!(
                "need at least 2 quadrature nodes, got {}",
                self.nodes
            )));
        }
        if !self.tol.is_finite() || self.tol <= 0.0 {
            return Err(Error::BadQuadConfig(format!(
                "tolerance must be positive and finite, got {}",
                self.tol
            )));
        }
        let bound = coeff_mass * tail_envelope_integral(kind, self.truncation, deg_max);
        if bound > self.tol {
            return Err(Error::TailBound { bound, tol: self.tol });
        }
        Ok(())
    }
}

/// Result of one quadrature moment evaluation.
#[derive(Clone, Copy, Debug)]
pub struct QuadMoment {
    /// Real part of the truncated integral.
    pub estimate: f64,
    /// Absolute value of the imaginary part — an internal consistency
    /// residual, since every moment under test is exactly real.
    pub imag_residual: f64,
    /// Certified bound on the truncation (tail) error.
    pub tail_bound: f64,
}

/// Certified two-sided tail bound for `∫_{|t|>T} |poly(x+ıt-1/2)|·w(t) dt`,
/// given the coefficient mass of the recentred polynomial.
pub fn tail_bound(kind: DensityKind, truncation: f64, deg_max: u32, coeff_mass: f64) -> f64 {
    coeff_mass * tail_envelope_integral(kind, truncation, deg_max)
}

/// `2·amp·∫_T^∞ (1+t)^n e^{-rate·t} dt`, evaluated by the exact recurrence.
fn tail_envelope_integral(kind: DensityKind, truncation: f64, deg: u32) -> f64 {
    let rate = kind.tail_rate();
    let amp = kind.tail_amp();
    let decay = (-rate * truncation).exp();
    let shifted = 1.0 + truncation;
    let mut j = decay / rate;
    let mut power = 1.0;
    for m in 1..=deg as u64 {
        power *= shifted;
        j = power * decay / rate + (m as f64 / rate) * j;
    }
    2.0 * amp * j
}

/// [`quad_moment`] with the configuration sized automatically from the
/// integrand itself: the recentred coefficient mass of `poly` at `x` fixes
/// both the certified window and the rule size. Returns the configuration
/// actually used alongside the estimate.
pub fn quad_moment_auto(
    kind: DensityKind,
    poly: &Poly,
    x: &Rational,
    tol: f64,
) -> Result<(QuadMoment, QuadConfig)> {
    let deg = poly.degree().unwrap_or(0) as u32;
    let mass = recentred_coeff_mass(poly, x);
    let cfg = QuadConfig::auto_for_mass(kind, deg, mass, tol);
    Ok((quad_moment(kind, poly, x, &cfg)?, cfg))
}

/// Quadrature estimate of `E[poly(x + ıT - 1/2)]` under the given law,
/// using an explicit configuration. Fails (without integrating) when the
/// configuration cannot certify the tolerance.
pub fn quad_moment(
    kind: DensityKind,
    poly: &Poly,
    x: &Rational,
    cfg: &QuadConfig,
) -> Result<QuadMoment> {
    let deg = poly.degree().unwrap_or(0) as u32;
    let mass = recentred_coeff_mass(poly, x);
    cfg.validate(kind, deg, mass)?;
    let rule = gauss_legendre(cfg.nodes);
    let centre = rational_to_f64(x) - 0.5;
    let mut re = Kahan::default();
    let mut im = Kahan::default();
    for (&node, &weight) in rule.0.iter().zip(rule.1.iter()) {
        let t = cfg.truncation * node;
        let w = cfg.truncation * weight * kind.pdf(t);
        let value = poly.eval_complex(ComplexVal::new(centre, t));
        re.add(value.re * w);
        im.add(value.im * w);
    }
    Ok(QuadMoment {
        estimate: re.value(),
        imag_residual: im.value().abs(),
        tail_bound: mass * tail_envelope_integral(kind, cfg.truncation, deg),
    })
}

/// Maximum deviation `max_i |∫ e^{ıt_i u} w(u) du − charfun(t_i)|` over the
/// supplied evaluation points (deviation includes any spurious imaginary
/// part of the numeric integral).
pub fn charfun_check(kind: DensityKind, ts: &[f64], cfg: &QuadConfig) -> Result<f64> {
    // The integrand e^{ıtu} has unit modulus, so degree 0 / unit mass
    // certifies the window for every t.
    cfg.validate(kind, 0, 1.0)?;
    let rule = gauss_legendre(cfg.nodes);
    let mut worst: f64 = 0.0;
    for &t in ts {
        let mut re = Kahan::default();
        let mut im = Kahan::default();
        for (&node, &weight) in rule.0.iter().zip(rule.1.iter()) {
            let u = cfg.truncation * node;
            let w = cfg.truncation * weight * kind.pdf(u);
            re.add(w * (t * u).cos());
            im.add(w * (t * u).sin());
        }
        let dev = ComplexVal::new(re.value() - kind.charfun(t), im.value()).norm();
        worst = worst.max(dev);
    }
    Ok(worst)
}

/// Sum of |coefficients| of `poly` recentred at `x - 1/2`, as f64 (clamped
/// to at least 1).
///
/// This dominates `|poly(x - 1/2 + ıt)| / (1+|t|)^n` uniformly in `t`, which
/// is exactly the constant the tail bound needs; computed exactly in
/// rationals first. Callers building an explicit [`QuadConfig`] pass this as
/// the `coeff_mass` argument of [`QuadConfig::validate`].
pub fn recentred_coeff_mass(poly: &Poly, x: &Rational) -> f64 {
    let centre = x - rat(1, 2);
    let recentred = poly.shift(&centre);
    let mut mass = Rational::from_integer(0.into());
    for c in recentred.coeffs() {
        mass += c.abs();
    }
    rational_to_f64(&mass).max(1.0)
}

type Rule = (Vec<f64>, Vec<f64>);

static RULES: Lazy<Mutex<HashMap<usize, Arc<Rule>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`,
/// computed by Newton iteration on the Legendre recurrence and memoised.
fn gauss_legendre(n: usize) -> Arc<Rule> {
    assert!(n >= 1, "empty quadrature rule");
    if let Some(rule) = RULES.lock().unwrap().get(&n) {
        return Arc::clone(rule);
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // Tricomi-style initial guess for the i-th positive root.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..64 {
            let (p, dp) = legendre_with_derivative(n, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let rule = Arc::new((nodes, weights));
    RULES
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&rule));
    rule
}

/// `(P_n(x), P_n'(x))` via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut prev = 1.0;
    let mut curr = x;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * curr - (kf - 1.0) * prev) / kf;
        prev = curr;
        curr = next;
    }
    let dp = if (x * x - 1.0).abs() < 1e-300 {
        // Endpoint derivative P_n'(±1) = ±n(n+1)/2 · (±1)^n; never reached by
        // interior Newton iterates, kept for completeness.
        let nf = n as f64;
        x.signum().powi(n as i32 + 1) * nf * (nf + 1.0) / 2.0
    } else {
        (n as f64) * (x * curr - prev) / (x * x - 1.0)
    };
    (curr, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical;
    use crate::rational::rat_int;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn gauss_legendre_integrates_low_degree_polynomials_exactly() {
        // An n-point rule is exact through degree 2n-1.
        let rule = gauss_legendre(8);
        for deg in 0..=15u32 {
            let quad: f64 = rule
                .0
                .iter()
                .zip(rule.1.iter())
                .map(|(&x, &w)| w * x.powi(deg as i32))
                .sum();
            let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
            assert!(close(quad, exact, 1e-13), "deg {deg}: {quad} vs {exact}");
        }
    }

    #[test]
    fn gauss_legendre_weights_sum_to_two() {
        for n in [2usize, 3, 17, 64, 257] {
            let rule = gauss_legendre(n);
            let total: f64 = rule.1.iter().sum();
            assert!(close(total, 2.0, 1e-12), "n={n}: {total}");
        }
    }

    #[test]
    fn tail_bound_certifies_and_shrinks() {
        for kind in [DensityKind::Logistic, DensityKind::Sech] {
            let b1 = tail_envelope_integral(kind, 5.0, 8);
            let b2 = tail_envelope_integral(kind, 10.0, 8);
            let b3 = tail_envelope_integral(kind, 20.0, 8);
            assert!(b1 > b2 && b2 > b3, "{kind}: bound not shrinking");
            assert!(b3 > 0.0);
            // Crude empirical tail via midpoint rule must sit below the bound.
            let mut empirical = 0.0;
            let (steps, hi) = (400_000, 60.0);
            let h = (hi - 10.0) / steps as f64;
            for i in 0..steps {
                let t = 10.0 + (i as f64 + 0.5) * h;
                empirical += 2.0 * (1.0 + t).powi(8) * kind.pdf(t) * h;
            }
            assert!(empirical <= b2, "{kind}: empirical {empirical} > bound {b2}");
        }
    }

    #[test]
    fn uncertifiable_configuration_is_rejected_before_integrating() {
        let cfg = QuadConfig { truncation: 1.0, nodes: 128, tol: 1e-10 };
        let err = quad_moment(
            DensityKind::Logistic,
            &classical::bernoulli_poly(8),
            &rat_int(0),
            &cfg,
        )
        .unwrap_err();
        assert!(matches!(err, Error::TailBound { .. }), "got {err}");
        // Nonsense windows and node counts are configuration errors.
        let bad = QuadConfig { truncation: -3.0, nodes: 128, tol: 1e-10 };
        assert!(matches!(
            bad.validate(DensityKind::Sech, 0, 1.0),
            Err(Error::BadQuadConfig(_))
        ));
        let tiny = QuadConfig { truncation: 10.0, nodes: 1, tol: 1e-10 };
        assert!(matches!(
            tiny.validate(DensityKind::Sech, 0, 1.0),
            Err(Error::BadQuadConfig(_))
        ));
    }

    #[test]
    fn auto_config_certifies_itself() {
        for kind in [DensityKind::Logistic, DensityKind::Sech] {
            let cfg = QuadConfig::auto(kind, 12, 1e-10);
            assert!(cfg.validate(kind, 12, 1.0).is_ok(), "{kind}: {cfg:?}");
        }
    }

    /// The moment representation itself: quadrature against the logistic law
    /// reproduces Bernoulli values, the secant law reproduces Euler values.
    #[test]
    fn quadrature_reproduces_exact_moments() {
        let xs = [rat_int(0), rat(1, 3), rat_int(-1), rat_int(3)];
        for n in [0usize, 1, 5, 12] {
            let monomial = Poly::monomial(n);
            for x in &xs {
                let bx = rational_to_f64(&classical::bernoulli_poly(n).eval(x));
                let (got, _) =
                    quad_moment_auto(DensityKind::Logistic, &monomial, x, 1e-10).unwrap();
                assert!(
                    close(got.estimate, bx, 1e-9),
                    "B_{n}({x}): {} vs {bx}",
                    got.estimate
                );
                assert!(got.imag_residual < 1e-9);

                let ex = rational_to_f64(&classical::euler_poly(n).eval(x));
                let (got, _) = quad_moment_auto(DensityKind::Sech, &monomial, x, 1e-10).unwrap();
                assert!(
                    close(got.estimate, ex, 1e-9),
                    "E_{n}({x}): {} vs {ex}",
                    got.estimate
                );
                assert!(got.imag_residual < 1e-9);
            }
        }
    }

    #[test]
    fn charfun_check_is_tight_on_both_laws() {
        let ts: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
        for kind in [DensityKind::Logistic, DensityKind::Sech] {
            let cfg = QuadConfig::auto(kind, 0, 1e-10);
            let dev = charfun_check(kind, &ts, &cfg).unwrap();
            assert!(dev < 1e-9, "{kind}: deviation {dev}");
        }
    }
}
