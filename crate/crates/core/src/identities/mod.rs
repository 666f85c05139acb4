//! Mechanical verification of the polynomial identity catalogue.
//!
//! Every identity is checked the same way: both sides are expanded to exact
//! [`Poly`] values (number identities become degree-0 polynomials) over a
//! finite grid of parameter tuples, and the residual `LHS - RHS` is recorded
//! per tuple.  A tuple passes exactly when its residual is the zero
//! polynomial; tuples violating a side condition are reported as skipped,
//! never silently dropped.  Identities that fail as printed are escalated to
//! a small closed [`correction`] search whose outcome is part of the report.

mod correction;
mod eval;
mod grid;
mod report;

pub use correction::{correction_search, Correction, CorrectionOutcome};
pub use eval::{bernstein_poly, beta_poly, identity_sides, Sides, Skip};
pub use grid::Grid;
pub use report::{to_csv, to_json_lines, to_text};

use crate::error::{Error, Result};
use crate::norlund::ParamVec;
use crate::poly::Poly;
use crate::rational::Rational;
use std::fmt;
use std::str::FromStr;

/// Identifier of one catalogued identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum IdentityId {
    BernNum3Case,
    Kim1Poly,
    KimEulerNum,
    KimPolyEuler,
    EulerSignLemma,
    BinomialBase,
    CancellationB,
    CancellationE,
    Prop42,
    Prop43,
    Prop44,
    MultinomialBPoly,
    MultinomialBNum,
    NorlundKim,
    MultidimEulerKim,
    RaabeB,
    RaabeEOdd,
    NielsenEven,
    EvenRaabeHigher,
}

impl IdentityId {
    /// Every identity, in catalogue order.
    pub const ALL: [IdentityId; 19] = [
        IdentityId::BernNum3Case,
        IdentityId::Kim1Poly,
        IdentityId::KimEulerNum,
        IdentityId::KimPolyEuler,
        IdentityId::EulerSignLemma,
        IdentityId::BinomialBase,
        IdentityId::CancellationB,
        IdentityId::CancellationE,
        IdentityId::Prop42,
        IdentityId::Prop43,
        IdentityId::Prop44,
        IdentityId::MultinomialBPoly,
        IdentityId::MultinomialBNum,
        IdentityId::NorlundKim,
        IdentityId::MultidimEulerKim,
        IdentityId::RaabeB,
        IdentityId::RaabeEOdd,
        IdentityId::NielsenEven,
        IdentityId::EvenRaabeHigher,
    ];

    /// Canonical SCREAMING_SNAKE name.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::BernNum3Case => "BERN_NUM_3CASE",
            IdentityId::Kim1Poly => "KIM1_POLY",
            IdentityId::KimEulerNum => "KIM_EULER_NUM",
            IdentityId::KimPolyEuler => "KIM_POLY_EULER",
            IdentityId::EulerSignLemma => "EULER_SIGN_LEMMA",
            IdentityId::BinomialBase => "BINOMIAL_BASE",
            IdentityId::CancellationB => "CANCELLATION_B",
            IdentityId::CancellationE => "CANCELLATION_E",
            IdentityId::Prop42 => "PROP42",
            IdentityId::Prop43 => "PROP43",
            IdentityId::Prop44 => "PROP44",
            IdentityId::MultinomialBPoly => "MULTINOMIAL_B_POLY",
            IdentityId::MultinomialBNum => "MULTINOMIAL_B_NUM",
            IdentityId::NorlundKim => "NORLUND_KIM",
            IdentityId::MultidimEulerKim => "MULTIDIM_EULER_KIM",
            IdentityId::RaabeB => "RAABE_B",
            IdentityId::RaabeEOdd => "RAABE_E_ODD",
            IdentityId::NielsenEven => "NIELSEN_EVEN",
            IdentityId::EvenRaabeHigher => "EVEN_RAABE_HIGHER",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Parses the canonical name; case and `-`/`_` are interchangeable.
    fn from_str(text: &str) -> Result<Self> {
        let normalised = text.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == normalised)
            .ok_or_else(|| Error::UnknownIdentity(text.to_string()))
    }
}

/// One parameter tuple of an identity grid.
///
/// `n` is always present; the remaining fields are populated as the identity
/// requires.  `xs` carries auxiliary rational points: for
/// `MULTINOMIAL_B_POLY` a vector of length `k-1` fixes the offsets
/// `x_2, ..., x_k` (the identity is then a polynomial identity in `x_1`),
/// while a vector of length `k` requests a fully evaluated point check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TuplePoint {
    pub n: u64,
    pub k: Option<u64>,
    pub m: Option<u64>,
    pub p: Option<u64>,
    pub y: Option<Rational>,
    pub a: Option<ParamVec>,
    pub xs: Option<Vec<Rational>>,
}

impl TuplePoint {
    pub fn new(n: u64) -> Self {
        TuplePoint {
            n,
            ..TuplePoint::default()
        }
    }

    /// Ordered `key=value` rendering used by the text and CSV reports.
    pub fn params_string(&self) -> String {
        let mut parts = vec![format!("n={}", self.n)];
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(y) = &self.y {
            parts.push(format!("y={}", crate::rational::format_rational(y)));
        }
        if let Some(a) = &self.a {
            parts.push(format!("a={a}"));
        }
        if let Some(xs) = &self.xs {
            let joined = xs
                .iter()
                .map(crate::rational::format_rational)
                .collect::<Vec<_>>()
                .join(";");
            parts.push(format!("x={joined}"));
        }
        parts.join(" ")
    }
}

/// Outcome of evaluating one tuple.
#[derive(Clone, Debug, PartialEq)]
pub enum TupleOutcome {
    /// Both sides expanded; residual `LHS - RHS` (zero = pass).
    Checked { residual: Poly },
    /// Side condition violated; the tuple was rejected, not evaluated.
    Skipped { reason: String },
}

impl TupleOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, TupleOutcome::Checked { residual } if residual.is_zero())
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, TupleOutcome::Checked { residual } if !residual.is_zero())
    }
}

/// Per-tuple verification record.
#[derive(Clone, Debug, PartialEq)]
pub struct TupleResult {
    pub point: TuplePoint,
    pub outcome: TupleOutcome,
}

/// Aggregate counts of a verification run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    /// Highest degree among nonzero residuals, if any failed.
    pub max_residual_degree: Option<usize>,
}

/// Full, deterministic report of one identity over one grid.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub results: Vec<TupleResult>,
    pub summary: Summary,
    /// Populated when at least one tuple failed: the correction-family
    /// search outcome over the full grid.
    pub corrections: Option<CorrectionOutcome>,
}

/// Expands every tuple of `grid` for `id` and reports residuals.
///
/// Tuple order in the report is the grid's lexicographic enumeration order.
/// When any tuple fails, the closed correction family is searched for a
/// member that zeroes the residual on the entire grid and the outcome is
/// attached to the report.
pub fn verify(id: IdentityId, grid: &Grid) -> IdentityReport {
    let points = grid.tuples(id);
    let mut summary = Summary::default();
    let mut results = Vec::with_capacity(points.len());
    for point in points {
        let outcome = match identity_sides(id, &point, None) {
            Err(Skip { reason }) => {
                summary.skipped += 1;
                TupleOutcome::Skipped { reason }
            }
            Ok(sides) => {
                let residual = &sides.lhs - &sides.rhs;
                if residual.is_zero() {
                    summary.pass += 1;
                } else {
                    summary.fail += 1;
                    summary.max_residual_degree = summary
                        .max_residual_degree
                        .max(residual.degree());
                }
                TupleOutcome::Checked { residual }
            }
        };
        results.push(TupleResult { point, outcome });
    }
    let corrections = if summary.fail > 0 {
        Some(correction::search_grid(id, grid))
    } else {
        None
    };
    IdentityReport {
        id,
        results,
        summary,
        corrections,
    }
}
