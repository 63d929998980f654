//! Rows whose condition is a conic through the nodes and P, with prescribed contact.

use nodalgaps::constructions::{realization, realize_row};
use nodalgaps::linsys::{classify_table_row, gap_sequence_at};
use nodalgaps::semigroups::TableRowId;

fn main() -> nodalgaps::Result<()> {
    for (d, id) in [
        (6, TableRowId::new(4, 2)),
        (6, TableRowId::new(5, 2)),
        (6, TableRowId::new(5, 3)),
    ] {
        println!("{id} at d={d}: {:?}", realization(d, id)?);
        let cfg = realize_row(d, id, 0)?;
        let gaps = gap_sequence_at(cfg.require_curve()?, &cfg.nodes, &cfg.p)?;
        println!("  classified as {}, gaps {gaps}", classify_table_row(&cfg)?);
    }
    Ok(())
}
