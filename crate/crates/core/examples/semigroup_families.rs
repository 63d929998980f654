//! Gap sequences and weights of the numerical semigroup families for one degree.
//!
//! `cargo run --example semigroup_families -- 7`

use nodalgaps::semigroups::{family_max, family_n1, n_d, weight, FamilyParams, MaxVariant};

fn main() -> nodalgaps::Result<()> {
    let d: u64 = std::env::args()
        .nth(1)
        .map_or(Ok(7), |s| s.parse())
        .expect("degree must be an integer");
    let nd = n_d(d)?;
    println!(
        "N_{d} = <{}, {d}>: gaps {} (conductor {})",
        d - 1,
        nd.gaps(),
        nd.conductor()
    );
    for delta in 1..=d - 2 {
        let p = FamilyParams::new(d, delta)?;
        let n1 = family_n1(p)?.gaps();
        println!("\nδ = {delta}, k = {}", p.k());
        println!("  {:<8} weight {:>3}  gaps {n1}", "N^(1)", weight(&n1));
        for v in [
            MaxVariant::Max,
            MaxVariant::Max2,
            MaxVariant::Max3,
            MaxVariant::Max4,
        ] {
            let label = format!("N^({v})");
            match family_max(p, v) {
                Ok(s) => {
                    let g = s.gaps();
                    let tag = if s.is_semigroup() {
                        ""
                    } else {
                        "  (not a semigroup)"
                    };
                    println!("  {label:<8} weight {:>3}  gaps {g}{tag}", weight(&g));
                }
                Err(e) => println!("  {label:<8} undefined: {e}"),
            }
        }
    }
    Ok(())
}
