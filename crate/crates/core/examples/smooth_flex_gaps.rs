//! Gap sequence at the total inflection point (0:0:1) of y z^(d-1) - x^d,
//! computed from the canonical series and compared with the closed form.

use nodalgaps::curvegeom::{inflection_order, PlaneCurve, ProjectivePoint};
use nodalgaps::exactmath::TernaryForm;
use nodalgaps::linsys::gap_sequence_at;
use nodalgaps::semigroups::n_d;

fn main() -> nodalgaps::Result<()> {
    let p = ProjectivePoint::from_i64(0, 0, 1);
    for d in 3..=7u32 {
        let curve = PlaneCurve::new(TernaryForm::from_i64_terms(
            d,
            &[([0, 1, d - 1], 1), ([d, 0, 0], -1)],
        )?)?;
        let gaps = gap_sequence_at(&curve, &[], &p)?;
        let expected = n_d(d as u64)?.gaps();
        println!(
            "d={d}: inflection order {}, gaps {gaps}, matches N_d: {}",
            inflection_order(&curve, &p)?,
            gaps == expected
        );
    }
    Ok(())
}
