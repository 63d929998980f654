//! Every row of the classification table for δ ≤ 5 at one degree, with its condition.
//!
//! `cargo run --example classification_table -- 6`

use nodalgaps::semigroups::{table_row, weight, TABLE};

fn main() {
    let d: u64 = std::env::args()
        .nth(1)
        .map_or(Ok(6), |s| s.parse())
        .expect("degree must be an integer");
    for row in TABLE.iter() {
        match table_row(d, row.id) {
            Ok(s) => {
                let g = s.gaps();
                println!(
                    "{:<12} w={:<3} {:<45} {}",
                    row.id.to_string(),
                    weight(&g),
                    g.to_string(),
                    row.condition
                );
            }
            Err(e) => println!("{:<12} undefined at d = {d}: {e}", row.id.to_string()),
        }
    }
}
