//! Closed-family correction search for identities that fail as printed.
//!
//! Classical identity statements are prone to transcription slips (dropped
//! signs, a parameter vector silently defaulted), so a failing tuple is
//! triaged rather than merely reported: a small closed family of candidate
//! corrections is tried, and a candidate counts only if it zeroes the
//! residual on the *entire* grid (a fix that breaks previously passing
//! tuples is no fix).

use super::eval::{identity_sides, Sides, Skip};
use super::{Grid, IdentityId, TuplePoint};

/// One member of the closed correction family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Correction {
    /// Negate the left-hand side.
    GlobalSign,
    /// Multiply the left-hand side by `(-1)^n`.
    ExtraSignN,
    /// Multiply the left-hand side by `(-1)^k`.
    ExtraSignK,
    /// Multiply the left-hand side by `(-1)^{n+k}`.
    ExtraSignNK,
    /// `EVEN_RAABE_HIGHER` only: carry the parameter vector on the
    /// left-hand Euler factor, `E_{n-k}^(k)(mx) -> E_{n-k}^(k)(mx | a)`.
    ParamEulerLeft,
}

impl Correction {
    pub const ALL: [Correction; 5] = [
        Correction::GlobalSign,
        Correction::ExtraSignN,
        Correction::ExtraSignK,
        Correction::ExtraSignNK,
        Correction::ParamEulerLeft,
    ];

    /// Human-readable descriptor used in reports.
    pub fn descriptor(self) -> &'static str {
        match self {
            Correction::GlobalSign => "global sign",
            Correction::ExtraSignN => "extra (-1)^n factor",
            Correction::ExtraSignK => "extra (-1)^k factor",
            Correction::ExtraSignNK => "extra (-1)^(n+k) factor",
            Correction::ParamEulerLeft => "parameterized Euler on the left-hand side",
        }
    }

    fn applies_to(self, id: IdentityId) -> bool {
        match self {
            Correction::ParamEulerLeft => id == IdentityId::EvenRaabeHigher,
            _ => true,
        }
    }
}

/// Outcome of a correction search.
#[derive(Clone, Debug, PartialEq)]
pub enum CorrectionOutcome {
    /// The tuple already has zero residual; nothing to correct.
    NotApplicable,
    /// Corrections (by descriptor) that zero the residual on the full grid.
    Found(Vec<&'static str>),
    /// No family member repairs the full grid.
    NoneFound,
}

/// Triage of one failing tuple: confirms the failure, then reports every
/// family member that repairs the *entire* grid.
pub fn correction_search(id: IdentityId, point: &TuplePoint, grid: &Grid) -> CorrectionOutcome {
    match identity_sides(id, point, None) {
        Err(_) => CorrectionOutcome::NotApplicable,
        Ok(sides) => {
            if sides.residual().is_zero() {
                CorrectionOutcome::NotApplicable
            } else {
                search_grid(id, grid)
            }
        }
    }
}

/// Full-grid search used both by `correction_search` and by `verify` when a
/// run contains failures.
pub(super) fn search_grid(id: IdentityId, grid: &Grid) -> CorrectionOutcome {
    let eval =
        move |point: &TuplePoint, c: Option<Correction>| -> Result<Sides, Skip> {
            identity_sides(id, point, c)
        };
    search_grid_with(&grid.tuples(id), id, &eval)
}

/// Evaluator signature shared by the real identity engine and test doubles.
pub(super) type TupleEval = dyn Fn(&TuplePoint, Option<Correction>) -> Result<Sides, Skip>;

/// Search over explicit tuples with a pluggable evaluator (tests plant
/// synthetic defects through it).
pub(super) fn search_grid_with(
    points: &[TuplePoint],
    id: IdentityId,
    eval: &TupleEval,
) -> CorrectionOutcome {
    let mut found = Vec::new();
    for candidate in Correction::ALL {
        if !candidate.applies_to(id) {
            continue;
        }
        let repairs_all = points.iter().all(|point| match eval(point, Some(candidate)) {
            Err(_) => true, // skipped tuples constrain nothing
            Ok(sides) => sides.residual().is_zero(),
        });
        if repairs_all {
            found.push(candidate.descriptor());
        }
    }
    if found.is_empty() {
        CorrectionOutcome::NoneFound
    } else {
        CorrectionOutcome::Found(found)
    }
}
