//! Power-series branch at a smooth point and intersection multiplicities read off it.

use nodalgaps::curvegeom::{
    branch_parametrization, intersection_multiplicity, tangent_line, PlaneCurve, ProjectivePoint,
};
use nodalgaps::exactmath::TernaryForm;

fn main() -> nodalgaps::Result<()> {
    let p = ProjectivePoint::from_i64(0, 0, 1);
    // y z - x^2 - x y: the conic v = u^2 + u v in the chart z = 1
    let conic = PlaneCurve::new(TernaryForm::from_i64_terms(
        2,
        &[([0, 1, 1], 1), ([2, 0, 0], -1), ([1, 1, 0], -1)],
    )?)?;
    let branch = branch_parametrization(&conic, &p, 6)?;
    let [x, y, z] = branch.point_series(6);
    println!("branch of the conic at (0:0:1), order 6:");
    println!(
        "  x(u) = {:?}",
        x.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "  y(u) = {:?}",
        y.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "  z(u) = {:?}",
        z.coeffs()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("  residual valuation: {:?}", branch.residual(&conic));

    let quintic = PlaneCurve::new(TernaryForm::from_i64_terms(
        5,
        &[([0, 1, 4], 1), ([5, 0, 0], -1), ([2, 3, 0], 1)],
    )?)?;
    let t = tangent_line(&quintic, &p)?;
    for (name, gamma) in [
        ("tangent", t.clone()),
        ("x", TernaryForm::linear_i64(1, 0, 0)),
        (
            "x^2 + y z",
            TernaryForm::from_i64_terms(2, &[([2, 0, 0], 1), ([0, 1, 1], 1)])?,
        ),
        ("tangent^2", t.pow(2)),
    ] {
        println!(
            "i({name}, Γ; P) = {:?}",
            intersection_multiplicity(&quintic, &gamma, &p, 12)?
        );
    }
    Ok(())
}
