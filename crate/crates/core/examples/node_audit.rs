//! Certifying that prescribed nodes are the only singularities of a curve.

use nodalgaps::curvegeom::{is_ordinary_node, singular_locus_audit, PlaneCurve, ProjectivePoint};
use nodalgaps::exactmath::TernaryForm;

fn main() -> nodalgaps::Result<()> {
    let origin = ProjectivePoint::from_i64(0, 0, 1);
    // z y^2 - x^2 (x + z): a node at the origin
    let cubic = PlaneCurve::new(TernaryForm::from_i64_terms(
        3,
        &[([0, 2, 1], 1), ([3, 0, 0], -1), ([2, 0, 1], -1)],
    )?)?;
    println!(
        "nodal cubic: ordinary node at origin = {}",
        is_ordinary_node(&cubic, &origin)?
    );
    let report = singular_locus_audit(&cubic, std::slice::from_ref(&origin), 0)?;
    println!(
        "  audit: {}",
        serde_json::to_string(&report).expect("report serializes")
    );

    // Claiming no nodes makes the audit find the unlisted one.
    let report = singular_locus_audit(&cubic, &[], 0)?;
    println!(
        "  audit without the node: certified = {}, failure = {:?}",
        report.certified, report.failure
    );

    // y z^3 - x^4 looks harmless near the origin but is singular at (0:1:0).
    let quartic = PlaneCurve::new(TernaryForm::from_i64_terms(
        4,
        &[([0, 1, 3], 1), ([4, 0, 0], -1)],
    )?)?;
    let report = singular_locus_audit(&quartic, &[], 0)?;
    println!(
        "y z^3 - x^4: certified = {}, singular points found = {}",
        report.certified, report.distinct_singular_points_found
    );
    Ok(())
}
