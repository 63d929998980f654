//! Explicit witnesses: line arrangements, the maximal-weight pencils, and
//! curves with nodes in prescribed special position.

mod lines;
mod pencil;
mod prescribed;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linsys::NodalConfiguration;
use crate::semigroups::{RowCondition, TableRow, TableRowId};

pub use lines::{line_arrangement, LineArrangement};
pub use pencil::{general_member, pencil, PencilSpec};
pub use prescribed::{collinear_config, conic_config, general_config, partially_collinear_config};

/// Environment variable overriding [`DEFAULT_RETRY_BUDGET`].
pub const RETRY_BUDGET_VAR: &str = "NODALGAPS_RETRY_BUDGET";
pub const DEFAULT_RETRY_BUDGET: usize = 32;

/// Samplings allowed per construction stage.
pub fn retry_budget() -> usize {
    std::env::var(RETRY_BUDGET_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_RETRY_BUDGET)
}

/// How a table row is realized by a rational witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessPlan {
    General,
    Collinear { on_line: usize, include_p: bool },
    Conic { contact: u8 },
}

/// Whether and how a table row can be realized at a given degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Realization {
    Witness {
        plan: WitnessPlan,
    },
    /// The row's condition cannot hold on an irreducible curve of this degree.
    Impossible {
        reason: String,
    },
    /// The row may occur, but the sampled witnesses cannot reach it.
    Unsupported {
        reason: String,
    },
}

/// Vector dimension expected for degree-`d` forms singular at `δ` given points
/// and meeting a given line only at a given point.
fn prescribed_dimension(d: usize, delta: usize) -> i64 {
    ((d + 1) * (d + 2) / 2) as i64 - 3 * delta as i64 - d as i64
}

/// Chooses the witness for row `id` at degree `d`.
///
/// A special line through `n` nodes (and `P`) meets the curve at least `2n (+1)`
/// times, and a conic through `n` nodes and `P` with contact `c` at least `2n + c`
/// times; beyond `d` (resp. `2d`) the line or conic would be a component. Witnesses
/// are drawn from the forms singular at sampled nodes with a total inflection at a
/// sampled `P`; when that system is expected to be a single curve, the sampled data
/// are generic and miss the locus where nodal members exist.
pub fn realization(d: u32, id: TableRowId) -> Result<Realization> {
    let row = TableRow::get(id)?;
    let d = d as usize;
    let delta = id.delta as usize;
    if d < 3 || delta > (d - 1) * (d - 2) / 2 {
        return Ok(Realization::Impossible {
            reason: format!("δ = {delta} exceeds the genus bound at d = {d}"),
        });
    }
    let plan = match row.condition {
        RowCondition::General => WitnessPlan::General,
        RowCondition::Collinear { nodes, includes_p } => {
            let n = nodes as usize;
            let load = 2 * n + includes_p as usize;
            if load > d {
                return Ok(Realization::Impossible {
                    reason: format!("the special line meets the curve in {load} > {d} points"),
                });
            }
            WitnessPlan::Collinear {
                on_line: n,
                include_p: includes_p,
            }
        }
        RowCondition::ConicThrough { nodes, contact } => {
            let load = 2 * nodes as usize + contact as usize;
            if load > 2 * d {
                return Ok(Realization::Impossible {
                    reason: format!(
                        "the special conic meets the curve in {load} > {} points",
                        2 * d
                    ),
                });
            }
            WitnessPlan::Conic { contact }
        }
    };
    let dim = prescribed_dimension(d, delta);
    if dim < 2 {
        return Ok(Realization::Unsupported {
            reason: format!("the prescribed system has expected dimension {dim}, not a pencil"),
        });
    }
    Ok(Realization::Witness { plan })
}

/// Builds and certifies a configuration intended to realize row `id`.
pub fn realize_row(d: u32, id: TableRowId, seed: u64) -> Result<NodalConfiguration> {
    let delta = id.delta as usize;
    match realization(d, id)? {
        Realization::Witness { plan } => match plan {
            WitnessPlan::General => general_config(d, delta, seed),
            WitnessPlan::Collinear { on_line, include_p } => {
                partially_collinear_config(d, delta, on_line, include_p, seed)
            }
            WitnessPlan::Conic { contact } => conic_config(d, delta, contact, seed),
        },
        Realization::Impossible { reason } | Realization::Unsupported { reason } => Err(
            Error::InconsistentConfiguration(format!("{id} at d = {d}: {reason}")),
        ),
    }
}
