//! The emptiness and multiplicity conditions on unions of general lines, for every δ.
//!
//! `cargo run --example degeneration_star -- 6`

use nodalgaps::constructions::line_arrangement;
use nodalgaps::linsys::check_hypothesis_star;
use nodalgaps::semigroups::smooth_genus;

fn main() -> nodalgaps::Result<()> {
    let d: u32 = std::env::args()
        .nth(1)
        .map_or(Ok(5), |s| s.parse())
        .expect("degree must be an integer");
    for delta in 0..=smooth_genus(d as u64) as usize {
        let arr = line_arrangement(d, delta, 0)?;
        let star = check_hypothesis_star(&arr.configuration())?;
        println!(
            "d={d} δ={delta:<2} k={} empties={:?} max multiplicity {} ≤ {} : holds = {} ({} draw(s))",
            star.k, star.empties_verified, star.max_multiplicity_found, star.multiplicity_bound, star.holds, arr.attempts
        );
    }
    Ok(())
}
