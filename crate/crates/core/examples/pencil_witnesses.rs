//! General members of the two pencils realize the maximal-weight families.

use nodalgaps::constructions::{general_member, pencil};
use nodalgaps::linsys::gap_sequence_at;
use nodalgaps::semigroups::{family_max, FamilyParams, MaxVariant};

fn main() -> nodalgaps::Result<()> {
    for (v, d, delta) in [
        (MaxVariant::Max, 5, 2),
        (MaxVariant::Max2, 4, 2),
        (MaxVariant::Max2, 6, 3),
    ] {
        let spec = pencil(v, d, delta, 0)?;
        let cfg = general_member(&spec, 0)?;
        let curve = cfg.require_curve()?;
        let gaps = gap_sequence_at(curve, &cfg.nodes, &cfg.p)?;
        let expected = family_max(FamilyParams::new(d as u64, delta as u64)?, v)?.gaps();
        println!("{v} d={d} δ={delta}");
        println!(
            "  curve: degree {}, {} terms",
            curve.degree(),
            curve.form().num_terms()
        );
        println!(
            "  nodes: {}",
            cfg.nodes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        );
        println!("  gaps at P {}: {gaps} (expected {expected})", cfg.p);
    }
    Ok(())
}
