//! The classification table of non-gap semigroups for one to five nodes.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{adjoin_checked, n_d, FamilyParams, NumericalSemigroup};
use crate::error::{Error, Result};

/// Row `N^(index)_{d,δ}` of the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TableRowId {
    pub delta: u8,
    pub index: u8,
}

impl TableRowId {
    pub const fn new(delta: u8, index: u8) -> Self {
        Self { delta, index }
    }

    pub fn rows_for(delta: u8) -> u8 {
        match delta {
            1 => 1,
            2 => 2,
            3 => 3,
            4 => 5,
            5 => 7,
            _ => 0,
        }
    }

    pub fn validate(self) -> Result<Self> {
        if (1..=Self::rows_for(self.delta)).contains(&self.index) {
            Ok(self)
        } else {
            Err(Error::InvalidArgument(format!(
                "no table row N^({})_{{d,{}}}",
                self.index, self.delta
            )))
        }
    }
}

impl fmt::Display for TableRowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N^({})_{{d,{}}}", self.index, self.delta)
    }
}

/// Machine-readable geometric condition attached to a table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowCondition {
    /// No special position.
    General,
    /// Exactly `nodes` of the nodes lie on a common line; `includes_p` says
    /// whether the marked point lies on that line too.
    Collinear { nodes: u8, includes_p: bool },
    /// No three nodes collinear, and a conic through `nodes` nodes and `P`
    /// meets the curve at `P` with multiplicity `contact`.
    ConicThrough { nodes: u8, contact: u8 },
}

impl fmt::Display for RowCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowCondition::General => write!(f, "GENERAL"),
            RowCondition::Collinear { nodes, includes_p } => {
                write!(f, "COLLINEAR{{nodes:{nodes}, includes_P:{includes_p}}}")
            }
            RowCondition::ConicThrough { nodes, contact } => {
                write!(
                    f,
                    "CONIC{{nodes:{nodes}, through_P:true, contact:{contact}}}"
                )
            }
        }
    }
}

/// One row: the parent row it extends (none means `N_d`), the adjoined value
/// `(d − shift)·d + offset`, and the geometric condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub id: TableRowId,
    pub parent: Option<TableRowId>,
    pub shift: i64,
    pub offset: i64,
    pub condition: RowCondition,
}

const fn row(
    delta: u8,
    index: u8,
    parent: Option<(u8, u8)>,
    shift: i64,
    offset: i64,
    condition: RowCondition,
) -> TableRow {
    let parent = match parent {
        Some((pd, pi)) => Some(TableRowId::new(pd, pi)),
        None => None,
    };
    TableRow {
        id: TableRowId::new(delta, index),
        parent,
        shift,
        offset,
        condition,
    }
}

use RowCondition::{Collinear, ConicThrough, General};

pub const TABLE: [TableRow; 18] = [
    row(1, 1, None, 3, 1, General),
    row(2, 1, Some((1, 1)), 4, 2, General),
    row(
        2,
        2,
        Some((1, 1)),
        4,
        1,
        Collinear {
            nodes: 2,
            includes_p: true,
        },
    ),
    row(3, 1, Some((2, 1)), 4, 1, General),
    row(
        3,
        2,
        Some((2, 1)),
        5,
        3,
        Collinear {
            nodes: 3,
            includes_p: false,
        },
    ),
    row(
        3,
        3,
        Some((2, 2)),
        5,
        1,
        Collinear {
            nodes: 3,
            includes_p: true,
        },
    ),
    row(4, 1, Some((3, 1)), 5, 3, General),
    row(
        4,
        2,
        Some((3, 1)),
        5,
        2,
        ConicThrough {
            nodes: 4,
            contact: 2,
        },
    ),
    row(
        4,
        3,
        Some((3, 1)),
        5,
        1,
        Collinear {
            nodes: 3,
            includes_p: true,
        },
    ),
    row(
        4,
        4,
        Some((3, 2)),
        6,
        4,
        Collinear {
            nodes: 4,
            includes_p: false,
        },
    ),
    row(
        4,
        5,
        Some((3, 3)),
        6,
        1,
        Collinear {
            nodes: 4,
            includes_p: true,
        },
    ),
    row(5, 1, Some((4, 1)), 5, 2, General),
    row(
        5,
        2,
        Some((4, 1)),
        5,
        1,
        ConicThrough {
            nodes: 5,
            contact: 1,
        },
    ),
    row(
        5,
        3,
        Some((4, 2)),
        5,
        1,
        ConicThrough {
            nodes: 5,
            contact: 2,
        },
    ),
    row(
        5,
        4,
        Some((4, 1)),
        6,
        4,
        Collinear {
            nodes: 4,
            includes_p: false,
        },
    ),
    row(
        5,
        5,
        Some((4, 3)),
        6,
        1,
        Collinear {
            nodes: 4,
            includes_p: true,
        },
    ),
    row(
        5,
        6,
        Some((4, 4)),
        7,
        5,
        Collinear {
            nodes: 5,
            includes_p: false,
        },
    ),
    row(
        5,
        7,
        Some((4, 5)),
        7,
        1,
        Collinear {
            nodes: 5,
            includes_p: true,
        },
    ),
];

/// The static description of a row.
pub fn table_rows(delta: u8) -> impl Iterator<Item = &'static TableRow> {
    TABLE.iter().filter(move |r| r.id.delta == delta)
}

fn lookup(id: TableRowId) -> Result<&'static TableRow> {
    let id = id.validate()?;
    Ok(TABLE
        .iter()
        .find(|r| r.id == id)
        .expect("validated id is tabulated"))
}

impl TableRow {
    pub fn get(id: TableRowId) -> Result<&'static TableRow> {
        lookup(id)
    }
}

/// Builds `N^(index)_{d,δ}` by the table's recursion. Rejects degrees for
/// which some adjoined value is nonpositive or already present.
pub fn table_row(d: u64, id: TableRowId) -> Result<NumericalSemigroup> {
    let entry = lookup(id)?;
    FamilyParams::new(d, id.delta as u64)?;
    let mut s = match entry.parent {
        None => n_d(d)?,
        Some(parent) => table_row(d, parent)?,
    };
    let value = (d as i64 - entry.shift) * d as i64 + entry.offset;
    adjoin_checked(&mut s, value, &format!("{id} at d = {d}"))?;
    Ok(s)
}
