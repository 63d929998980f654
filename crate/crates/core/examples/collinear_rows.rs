//! Witnesses with collinear nodes, classified into table rows.

use nodalgaps::constructions::collinear_config;
use nodalgaps::linsys::{classify_table_row, gap_sequence_at};

fn main() -> nodalgaps::Result<()> {
    for (d, delta, include_p) in [(5, 2, true), (5, 2, false), (6, 3, false), (7, 3, true)] {
        let cfg = collinear_config(d, delta, include_p, 0)?;
        let gaps = gap_sequence_at(cfg.require_curve()?, &cfg.nodes, &cfg.p)?;
        let row = classify_table_row(&cfg)?;
        println!("d={d} δ={delta} P on the node line: {include_p:<5} → {row}, gaps {gaps}");
    }
    match collinear_config(6, 3, true, 0) {
        Ok(_) => println!("unexpected witness for three collinear nodes and P on a sextic"),
        Err(e) => println!("d=6 δ=3 with P on the line: {e}"),
    }
    Ok(())
}
