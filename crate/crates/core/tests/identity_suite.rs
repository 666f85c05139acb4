//! Full catalogue run: every identity over its documented default grid.
//!
//! The contract: every evaluated tuple has a zero residual, side-condition
//! skips are explicit, and the one identity that fails as printed is
//! repaired by exactly one member of the closed correction family,
//! consistently across its whole grid.

use norlund_core::identities::{
    identity_sides, verify, CorrectionOutcome, Grid, IdentityId, TupleOutcome,
};
use norlund_core::Rational;

/// Identities expected to verify as printed on their default grids.
fn passes_as_printed(id: IdentityId) -> bool {
    id != IdentityId::EvenRaabeHigher
}

#[test]
fn whole_catalogue_verifies_on_default_grids() {
    for id in IdentityId::ALL {
        let grid = Grid::default_for(id);
        let report = verify(id, &grid);
        assert!(
            !report.results.is_empty(),
            "{id}: empty grid would verify nothing"
        );
        if passes_as_printed(id) {
            assert_eq!(
                report.summary.fail, 0,
                "{id}: {} tuples failed as printed",
                report.summary.fail
            );
            assert!(report.summary.pass > 0, "{id}: no tuple actually checked");
            assert!(report.corrections.is_none());
        } else {
            // Fails as printed, and the correction search pins down a single
            // consistent repaired form over the entire grid.
            assert!(report.summary.fail > 0, "{id}: expected printed-form failures");
            match &report.corrections {
                Some(CorrectionOutcome::Found(descriptors)) => {
                    assert_eq!(
                        descriptors.as_slice(),
                        ["parameterized Euler on the left-hand side"],
                        "{id}: unexpected correction set"
                    );
                }
                other => panic!("{id}: correction search came back with {other:?}"),
            }
        }
    }
}

/// Skips are confined to the identities with genuine side conditions, and
/// every skip carries a reason.
#[test]
fn skips_are_documented_and_confined() {
    for id in IdentityId::ALL {
        let report = verify(id, &Grid::default_for(id));
        for result in &report.results {
            if let TupleOutcome::Skipped { reason } = &result.outcome {
                assert!(
                    !reason.is_empty(),
                    "{id}: skipped tuple without a reason"
                );
                assert!(
                    matches!(id, IdentityId::EulerSignLemma),
                    "{id}: unexpected skip ({reason}) at {}",
                    result.point.params_string()
                );
            }
        }
    }
}

/// The Euler-number restatement is exactly the polynomial statement pinned
/// at x = 0: on the shared (n, k) triangle the two sides agree tuple for
/// tuple after evaluating the polynomials at zero.
#[test]
fn euler_number_form_is_the_polynomial_form_at_zero() {
    let zero = Rational::from_integer(0.into());
    let grid = Grid::default_for(IdentityId::KimEulerNum);
    for point in grid.tuples(IdentityId::KimEulerNum) {
        let num = identity_sides(IdentityId::KimEulerNum, &point, None)
            .expect("triangle tuples evaluate");
        let poly = identity_sides(IdentityId::KimPolyEuler, &point, None)
            .expect("triangle tuples evaluate");
        assert_eq!(
            num.lhs.coeff(0),
            poly.lhs.eval(&zero),
            "lhs mismatch at {}",
            point.params_string()
        );
        assert_eq!(
            num.rhs.coeff(0),
            poly.rhs.eval(&zero),
            "rhs mismatch at {}",
            point.params_string()
        );
    }
}

/// Determinism: a repeated run serialises to the identical report.
#[test]
fn reports_are_deterministic() {
    use norlund_core::identities::to_json_lines;
    for id in [IdentityId::Prop44, IdentityId::MultinomialBPoly] {
        let a = to_json_lines(&verify(id, &Grid::default_for(id)));
        let b = to_json_lines(&verify(id, &Grid::default_for(id)));
        assert_eq!(a, b, "{id}: nondeterministic report");
    }
}
